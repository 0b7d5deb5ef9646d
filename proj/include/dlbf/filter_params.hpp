#pragma once

#include <cstdint>
#include <string>

namespace dlbf {

/// Dimensions of a Deletable Bloom filter.
///
/// `m` bits are split into an `r`-bit collision bitmap and `m - r` data bits.
/// The data bits are partitioned into `r` regions of ceil((m - r) / r) bits;
/// when r does not divide m - r the last region is short and trailing regions
/// may be empty.
struct FilterParams {
  std::uint32_t m = 0;
  std::uint32_t r = 0;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;

  [[nodiscard]] std::uint32_t data_bits() const noexcept { return m - r; }
  [[nodiscard]] std::uint32_t region_width() const noexcept { return (data_bits() + r - 1) / r; }

  /// The deletability model is only an approximation when r >= k. Smaller r is
  /// legal but worth a warning.
  [[nodiscard]] bool satisfies_model_assumption() const noexcept { return r >= k; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FilterParams&, const FilterParams&) = default;
};

}  // namespace dlbf
