#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dlbf/deletable_bloom_filter.hpp"
#include "dlbf/filter_params.hpp"

namespace dlbf {

// Exact model of the filter's semantics, kept deliberately naive: one integer
// counter per data bit and one flag per region. Used to cross-check the
// bit-level implementation.
class ReferenceOracle {
 public:
  explicit ReferenceOracle(const FilterParams& params);

  void insert(std::string_view element);

  /// All k counters are nonzero.
  [[nodiscard]] bool present(std::string_view element) const;
  /// Some index lies in an unmarked region and has a nonzero counter.
  [[nodiscard]] bool deletable(std::string_view element) const;
  /// What DeletableBloomFilter::remove would report right now.
  [[nodiscard]] RemoveOutcome classify(std::string_view element) const;

  [[nodiscard]] const std::vector<std::uint32_t>& counters() const noexcept { return counters_; }
  [[nodiscard]] const std::vector<bool>& marked_regions() const noexcept { return marked_; }

 private:
  FilterParams params_;
  std::vector<std::uint32_t> counters_;
  std::vector<bool> marked_;
};

}  // namespace dlbf
