#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace dlbf {

/// Identifier of the index-derivation scheme, stored in filter files.
inline constexpr std::uint8_t kHashSchemeMurmur3DoubleHashing = 0x01;

struct Digest128 {
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;
  friend bool operator==(const Digest128&, const Digest128&) = default;
};

/// MurmurHash3 x64/128 with the seed widened to 64 bits (both lanes start at
/// `seed`). For seeds below 2^32 it matches the reference implementation.
Digest128 murmur3_x64_128(std::string_view bytes, std::uint64_t seed) noexcept;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Calls fn(i, index) for the k indices of `element` in [0, range):
///   index_i = mix64(h1 + i * (h2 | 1)) mod range,   arithmetic mod 2^64,
/// where (h1, h2) = murmur3_x64_128(element, seed). The finalizer breaks the
/// arithmetic progression of plain double hashing, which inflates the false
/// positive rate noticeably when range is small and composite.
/// Duplicates are possible and are reported as-is.
template <typename Fn>
void for_each_index(std::string_view element, std::uint64_t seed, std::uint32_t range,
                    std::uint32_t k, Fn&& fn) {
  const Digest128 d = murmur3_x64_128(element, seed);
  const std::uint64_t step = d.h2 | 1U;
  std::uint64_t acc = d.h1;
  for (std::uint32_t i = 0; i < k; ++i) {
    fn(i, static_cast<std::uint32_t>(mix64(acc) % range));
    acc += step;
  }
}

std::vector<std::uint32_t> index_set(std::string_view element, std::uint64_t seed,
                                     std::uint32_t range, std::uint32_t k);

}  // namespace dlbf
