#include "dlbf/serialization.hpp"

#include <array>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "dlbf/errors.hpp"
#include "dlbf/hashing.hpp"

namespace dlbf {

std::string_view to_string(ParseErrc code) noexcept {
  switch (code) {
    case ParseErrc::kBadMagic:
      return "bad magic";
    case ParseErrc::kUnsupportedVersion:
      return "unsupported version";
    case ParseErrc::kUnknownHashScheme:
      return "unknown hash scheme";
    case ParseErrc::kTruncated:
      return "truncated payload";
    case ParseErrc::kTrailingBytes:
      return "trailing bytes";
    case ParseErrc::kInconsistentDimensions:
      return "inconsistent dimensions";
    case ParseErrc::kNonzeroPadding:
      return "nonzero padding bits";
  }
  return "?";
}

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'D', 'L', 'B', 'F'};

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = sizeof(T); i > 0; --i) value = (value << 8) | bytes[offset + i - 1];
  return value;
}

[[noreturn]] void fail(ParseErrc code, const std::string& detail) {
  throw ParseError(code, std::string(to_string(code)) + ": " + detail);
}

}  // namespace

std::vector<std::uint8_t> serialize(const DeletableBloomFilter& filter) {
  const FilterParams& p = filter.params();
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + filter.collision_bitmap().byte_size() + filter.data_bits().byte_size());
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  out.push_back(kFormatVersion);
  out.push_back(kHashSchemeMurmur3DoubleHashing);
  put_le(out, p.m);
  put_le(out, p.r);
  put_le(out, p.k);
  put_le(out, p.seed);
  filter.collision_bitmap().write_bytes(out);
  filter.data_bits().write_bytes(out);
  return out;
}

DeletableBloomFilter deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    fail(ParseErrc::kBadMagic, "expected \"DLBF\"");
  }
  if (bytes.size() < kHeaderSize) {
    fail(ParseErrc::kTruncated, "header needs " + std::to_string(kHeaderSize) + " bytes, got " +
                                    std::to_string(bytes.size()));
  }
  if (bytes[4] != kFormatVersion) {
    fail(ParseErrc::kUnsupportedVersion, "version " + std::to_string(bytes[4]));
  }
  if (bytes[5] != kHashSchemeMurmur3DoubleHashing) {
    fail(ParseErrc::kUnknownHashScheme, "scheme id " + std::to_string(bytes[5]));
  }

  FilterParams params;
  params.m = get_le<std::uint32_t>(bytes, 6);
  params.r = get_le<std::uint32_t>(bytes, 10);
  params.k = get_le<std::uint32_t>(bytes, 14);
  params.seed = get_le<std::uint64_t>(bytes, 18);
  try {
    params.validate();
  } catch (const ConfigError& e) {
    fail(ParseErrc::kInconsistentDimensions, e.what());
  }

  const std::size_t bitmap_bytes = (std::size_t{params.r} + 7) / 8;
  const std::size_t data_bytes = (std::size_t{params.data_bits()} + 7) / 8;
  const std::size_t expected = kHeaderSize + bitmap_bytes + data_bytes;
  if (bytes.size() < expected) {
    fail(ParseErrc::kTruncated, "expected " + std::to_string(expected) + " bytes, got " +
                                    std::to_string(bytes.size()));
  }
  if (bytes.size() > expected) {
    fail(ParseErrc::kTrailingBytes, "expected " + std::to_string(expected) + " bytes, got " +
                                        std::to_string(bytes.size()));
  }

  BitArray bitmap;
  BitArray data;
  if (!BitArray::read_bytes(bytes.subspan(kHeaderSize, bitmap_bytes), params.r, bitmap)) {
    fail(ParseErrc::kNonzeroPadding, "collision bitmap");
  }
  if (!BitArray::read_bytes(bytes.subspan(kHeaderSize + bitmap_bytes, data_bytes),
                            params.data_bits(), data)) {
    fail(ParseErrc::kNonzeroPadding, "data bits");
  }
  return DeletableBloomFilter::from_parts(params, std::move(bitmap), std::move(data));
}

DeletableBloomFilter load_filter(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open filter file " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("error reading filter file " + path.string());
  return deserialize(bytes);
}

void save_filter(const std::filesystem::path& path, const DeletableBloomFilter& filter) {
  const std::vector<std::uint8_t> bytes = serialize(filter);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("error writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error("cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace dlbf
