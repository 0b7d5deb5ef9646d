#pragma once

#include <cstdint>
#include <string_view>

#include "dlbf/bit_array.hpp"

namespace dlbf {

/// Plain m-bit Bloom filter using the same index derivation as
/// DeletableBloomFilter, over the full m bits.
class StandardBloomFilter {
 public:
  StandardBloomFilter(std::uint32_t m, std::uint32_t k, std::uint64_t seed);

  void insert(std::string_view element);
  [[nodiscard]] bool contains(std::string_view element) const;

  [[nodiscard]] std::uint32_t m() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t k() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] const BitArray& bits() const noexcept { return bits_; }

 private:
  std::uint32_t m_;
  std::uint32_t k_;
  std::uint64_t seed_;
  BitArray bits_;
};

}  // namespace dlbf
