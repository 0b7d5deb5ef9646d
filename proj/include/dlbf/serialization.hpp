#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dlbf/deletable_bloom_filter.hpp"

namespace dlbf {

// Filter file layout, all integers little-endian:
//
//   offset  size  field
//        0     4  magic "DLBF"
//        4     1  format version (0x01)
//        5     1  hash scheme id (0x01 = murmur3 x64/128 double hashing)
//        6     4  m
//       10     4  r
//       14     4  k
//       18     8  seed
//       26     ceil(r/8)      collision bitmap
//        .     ceil((m-r)/8)  data bits
//
// Bit i of an array is stored in byte i/8 at bit position i%8 (LSB first).
// Unused padding bits must be zero.
inline constexpr std::uint8_t kFormatVersion = 0x01;
inline constexpr std::size_t kHeaderSize = 26;

std::vector<std::uint8_t> serialize(const DeletableBloomFilter& filter);

/// Throws ParseError; never returns a partially decoded filter.
DeletableBloomFilter deserialize(std::span<const std::uint8_t> bytes);

/// Throws Error if the file cannot be read, ParseError if it is malformed.
DeletableBloomFilter load_filter(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so `path`
/// either keeps its old contents or holds the complete new filter.
void save_filter(const std::filesystem::path& path, const DeletableBloomFilter& filter);

}  // namespace dlbf
