#include "dlbf/standard_bloom_filter.hpp"

#include <gtest/gtest.h>

#include "dlbf/analysis.hpp"
#include "dlbf/errors.hpp"
#include "test_util.hpp"

namespace dlbf {
namespace {

using ::dlbf::testing::make_keys;

TEST(StandardBloomFilterTest, EmptyQueriesFalse) {
  const StandardBloomFilter sbf(240, 5, 42);
  for (const auto& key : make_keys(100, 1)) EXPECT_FALSE(sbf.contains(key));
}

TEST(StandardBloomFilterTest, InsertedElementsQueryTrue) {
  StandardBloomFilter sbf(240, 5, 42);
  const auto keys = make_keys(40, 2);
  for (const auto& key : keys) sbf.insert(key);
  for (const auto& key : keys) EXPECT_TRUE(sbf.contains(key));
}

TEST(StandardBloomFilterTest, UsesFullBitRange) {
  StandardBloomFilter sbf(240, 5, 42);
  sbf.insert("x");
  for (std::uint32_t idx : {176U, 70U, 161U, 88U, 80U}) EXPECT_TRUE(sbf.bits().test(idx));
  EXPECT_EQ(sbf.bits().count(), 5U);
}

TEST(StandardBloomFilterTest, RejectsZeroDimensions) {
  EXPECT_THROW(StandardBloomFilter(0, 5, 1), ConfigError);
  EXPECT_THROW(StandardBloomFilter(240, 0, 1), ConfigError);
}

TEST(StandardBloomFilterTest, ProbeRateMatchesClosedForm) {
  const double expected = analysis::fpr_sbf(240, 5, 22);
  ASSERT_NEAR(expected, 0.00677365, 1e-7);
  double sum = 0.0;
  double sum_sq = 0.0;
  constexpr int kFilters = 1000;
  for (int f = 0; f < kFilters; ++f) {
    StandardBloomFilter sbf(240, 5, static_cast<std::uint64_t>(f));
    for (const auto& key : make_keys(22, 2000 + f)) sbf.insert(key);
    int hits = 0;
    for (const auto& probe : make_keys(100, 800000 + f)) hits += sbf.contains(probe) ? 1 : 0;
    const double rate = hits / 100.0;
    sum += rate;
    sum_sq += rate * rate;
  }
  const double mean = sum / kFilters;
  const double se = std::sqrt((sum_sq / kFilters - mean * mean) / (kFilters - 1));
  EXPECT_NEAR(mean, expected, 3 * se);
}

}  // namespace
}  // namespace dlbf
