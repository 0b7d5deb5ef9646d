#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dlbf/bit_array.hpp"
#include "dlbf/filter_params.hpp"

namespace dlbf {

enum class RemoveOutcome : std::uint8_t {
  kDeleted,       // at least one bit was cleared
  kNotDeletable,  // present, but every bit sits in a collided region
  kNotPresent,    // query was false; filter untouched
};

std::string_view to_string(RemoveOutcome outcome) noexcept;

struct BitCounts {
  std::size_t data_bits_set = 0;
  std::size_t bitmap_bits_set = 0;
  friend bool operator==(const BitCounts&, const BitCounts&) = default;
};

// A Bloom filter that spends r of its m bits on a collision bitmap.
//
// Each bitmap bit covers one region of the remaining m - r data bits and is
// raised the first time an insertion lands on an already-set bit in that
// region. Bits in regions that never saw a collision were set by exactly one
// insertion, so remove() may clear them without creating false negatives.
// Bitmap bits are never lowered.
//
// Removing an element that was not inserted, or inserting an element twice
// and removing it, voids the no-false-negative guarantee for other elements.
//
// No internal synchronization: one writer or many readers.
class DeletableBloomFilter {
 public:
  /// Throws ConfigError if `params` is invalid.
  explicit DeletableBloomFilter(const FilterParams& params);

  /// Reassembles a filter from its stored state. Sizes must match `params`.
  static DeletableBloomFilter from_parts(const FilterParams& params, BitArray collision_bitmap,
                                         BitArray data_bits);

  void insert(std::string_view element);
  [[nodiscard]] bool contains(std::string_view element) const;
  RemoveOutcome remove(std::string_view element);

  /// The k data-bit positions of `element`, in derivation order.
  [[nodiscard]] std::vector<std::uint32_t> indices(std::string_view element) const;
  /// Region holding data bit `index`. Throws ContractError if index >= m - r.
  [[nodiscard]] std::uint32_t region_of(std::uint32_t index) const;
  [[nodiscard]] bool region_collided(std::uint32_t region) const { return collisions_.test(region); }

  [[nodiscard]] BitCounts bit_counts() const noexcept;

  [[nodiscard]] const FilterParams& params() const noexcept { return params_; }
  [[nodiscard]] const BitArray& collision_bitmap() const noexcept { return collisions_; }
  [[nodiscard]] const BitArray& data_bits() const noexcept { return data_; }

  friend bool operator==(const DeletableBloomFilter&, const DeletableBloomFilter&) = default;

 private:
  FilterParams params_;
  std::uint32_t width_;
  BitArray collisions_;
  BitArray data_;
};

}  // namespace dlbf
