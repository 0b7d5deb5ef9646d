#include "dlbf/reference_oracle.hpp"

#include "dlbf/hashing.hpp"

namespace dlbf {

ReferenceOracle::ReferenceOracle(const FilterParams& params)
    : params_((params.validate(), params)), counters_(params.data_bits(), 0), marked_(params.r, false) {}

void ReferenceOracle::insert(std::string_view element) {
  const std::uint32_t width = params_.region_width();
  for (std::uint32_t idx : index_set(element, params_.seed, params_.data_bits(), params_.k)) {
    if (counters_[idx] >= 1) marked_[idx / width] = true;
    ++counters_[idx];
  }
}

bool ReferenceOracle::present(std::string_view element) const {
  for (std::uint32_t idx : index_set(element, params_.seed, params_.data_bits(), params_.k)) {
    if (counters_[idx] == 0) return false;
  }
  return true;
}

bool ReferenceOracle::deletable(std::string_view element) const {
  const std::uint32_t width = params_.region_width();
  for (std::uint32_t idx : index_set(element, params_.seed, params_.data_bits(), params_.k)) {
    if (!marked_[idx / width] && counters_[idx] >= 1) return true;
  }
  return false;
}

RemoveOutcome ReferenceOracle::classify(std::string_view element) const {
  if (!present(element)) return RemoveOutcome::kNotPresent;
  return deletable(element) ? RemoveOutcome::kDeleted : RemoveOutcome::kNotDeletable;
}

}  // namespace dlbf
