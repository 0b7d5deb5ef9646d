#include "dlbf/standard_bloom_filter.hpp"

#include "dlbf/errors.hpp"
#include "dlbf/hashing.hpp"

namespace dlbf {

StandardBloomFilter::StandardBloomFilter(std::uint32_t m, std::uint32_t k, std::uint64_t seed)
    : m_(m), k_(k), seed_(seed), bits_(m) {
  if (m == 0) throw ConfigError("invalid dimensions: m must be >= 1");
  if (k == 0) throw ConfigError("invalid dimensions: k must be >= 1");
}

void StandardBloomFilter::insert(std::string_view element) {
  for_each_index(element, seed_, m_, k_, [&](std::uint32_t, std::uint32_t idx) { bits_.set(idx); });
}

bool StandardBloomFilter::contains(std::string_view element) const {
  bool all_set = true;
  for_each_index(element, seed_, m_, k_,
                 [&](std::uint32_t, std::uint32_t idx) { all_set = all_set && bits_.test(idx); });
  return all_set;
}

}  // namespace dlbf
