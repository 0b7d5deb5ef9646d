#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlbf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid filter dimensions or experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Analytical model evaluated outside its domain (e.g. m' = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a precondition that the filter checks (e.g. bit index out of range).
class ContractError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrc {
  kBadMagic,
  kUnsupportedVersion,
  kUnknownHashScheme,
  kTruncated,
  kTrailingBytes,
  kInconsistentDimensions,
  kNonzeroPadding,
};

std::string_view to_string(ParseErrc code) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrc code, const std::string& what) : Error(what), code_(code) {}
  [[nodiscard]] ParseErrc code() const noexcept { return code_; }

 private:
  ParseErrc code_;
};

}  // namespace dlbf
