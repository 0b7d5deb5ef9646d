#include "dlbf/deletable_bloom_filter.hpp"

#include <string>

#include "dlbf/errors.hpp"
#include "dlbf/hashing.hpp"

namespace dlbf {

std::string_view to_string(RemoveOutcome outcome) noexcept {
  switch (outcome) {
    case RemoveOutcome::kDeleted:
      return "Deleted";
    case RemoveOutcome::kNotDeletable:
      return "NotDeletable";
    case RemoveOutcome::kNotPresent:
      return "NotPresent";
  }
  return "?";
}

DeletableBloomFilter::DeletableBloomFilter(const FilterParams& params)
    : params_((params.validate(), params)),
      width_(params.region_width()),
      collisions_(params.r),
      data_(params.data_bits()) {}

DeletableBloomFilter DeletableBloomFilter::from_parts(const FilterParams& params,
                                                      BitArray collision_bitmap,
                                                      BitArray data_bits) {
  DeletableBloomFilter filter(params);
  if (collision_bitmap.size() != params.r || data_bits.size() != params.data_bits()) {
    throw ConfigError("bit array sizes do not match " + params.to_string());
  }
  filter.collisions_ = std::move(collision_bitmap);
  filter.data_ = std::move(data_bits);
  return filter;
}

std::uint32_t DeletableBloomFilter::region_of(std::uint32_t index) const {
  if (index >= params_.data_bits()) {
    throw ContractError("data bit index " + std::to_string(index) + " out of range [0, " +
                        std::to_string(params_.data_bits()) + ")");
  }
  return index / width_;
}

std::vector<std::uint32_t> DeletableBloomFilter::indices(std::string_view element) const {
  return index_set(element, params_.seed, params_.data_bits(), params_.k);
}

void DeletableBloomFilter::insert(std::string_view element) {
  // A repeated index within one element counts as a collision too.
  for_each_index(element, params_.seed, params_.data_bits(), params_.k,
                 [&](std::uint32_t, std::uint32_t idx) {
                   if (data_.test_and_set(idx)) collisions_.set(idx / width_);
                 });
}

bool DeletableBloomFilter::contains(std::string_view element) const {
  bool all_set = true;
  for_each_index(element, params_.seed, params_.data_bits(), params_.k,
                 [&](std::uint32_t, std::uint32_t idx) { all_set = all_set && data_.test(idx); });
  return all_set;
}

RemoveOutcome DeletableBloomFilter::remove(std::string_view element) {
  if (!contains(element)) return RemoveOutcome::kNotPresent;
  bool cleared = false;
  for_each_index(element, params_.seed, params_.data_bits(), params_.k,
                 [&](std::uint32_t, std::uint32_t idx) {
                   if (!collisions_.test(idx / width_) && data_.test(idx)) {
                     data_.reset(idx);
                     cleared = true;
                   }
                 });
  return cleared ? RemoveOutcome::kDeleted : RemoveOutcome::kNotDeletable;
}

BitCounts DeletableBloomFilter::bit_counts() const noexcept {
  return {data_.count(), collisions_.count()};
}

}  // namespace dlbf
