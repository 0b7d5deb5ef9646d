// Randomized properties of the filter, checked against the counter-based
// reference model.

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dlbf/deletable_bloom_filter.hpp"
#include "dlbf/reference_oracle.hpp"
#include "dlbf/serialization.hpp"
#include "dlbf/simulation.hpp"
#include "test_util.hpp"

namespace dlbf {
namespace {

using ::dlbf::testing::make_keys;
using ::dlbf::testing::uniform;

// m in [64, 512], k in [1, 8], r in [k, m/2].
FilterParams random_params(std::mt19937_64& rng) {
  FilterParams p;
  p.m = uniform(rng, 64, 512);
  p.k = uniform(rng, 1, 8);
  p.r = uniform(rng, p.k, p.m / 2);
  p.seed = rng();
  return p;
}

TEST(PropertyTest, NoFalseNegatives) {
  std::mt19937_64 rng(1);
  for (int seq = 0; seq < 1000; ++seq) {
    const FilterParams p = random_params(rng);
    DeletableBloomFilter filter(p);
    const auto keys = make_keys(uniform(rng, 1, p.m / 4), seq);
    for (const auto& key : keys) filter.insert(key);

    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t removals = uniform(rng, 0, static_cast<std::uint32_t>(keys.size()));
    std::vector<bool> removed(keys.size(), false);
    for (std::size_t i = 0; i < removals; ++i) {
      ASSERT_NE(filter.remove(keys[order[i]]), RemoveOutcome::kNotPresent);
      removed[order[i]] = true;
      // Check every survivor after each removal.
      for (std::size_t j = 0; j < keys.size(); ++j) {
        if (!removed[j]) ASSERT_TRUE(filter.contains(keys[j])) << p.to_string() << " seq " << seq;
      }
    }
  }
}

TEST(PropertyTest, RemovalOrderIndependence) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const FilterParams p = random_params(rng);
    const auto keys = make_keys(uniform(rng, 1, p.m / 4), 10000 + trial);
    DeletableBloomFilter base(p);
    for (const auto& key : keys) base.insert(key);

    std::vector<RemoveOutcome> reference(keys.size());
    {
      DeletableBloomFilter f = base;
      for (std::size_t i = 0; i < keys.size(); ++i) reference[i] = f.remove(keys[i]);
    }
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(order.begin(), order.end(), rng);
      DeletableBloomFilter f = base;
      for (std::size_t i : order) ASSERT_EQ(f.remove(keys[i]), reference[i]);
    }
  }
}

TEST(PropertyTest, CollisionBitmapIsMonotone) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const FilterParams p = random_params(rng);
    DeletableBloomFilter filter(p);
    const auto keys = make_keys(p.m / 3, 20000 + trial);
    BitArray previous = filter.collision_bitmap();
    for (const auto& key : keys) {
      filter.insert(key);
      const BitArray& now = filter.collision_bitmap();
      for (std::size_t reg = 0; reg < p.r; ++reg) {
        if (previous.test(reg)) ASSERT_TRUE(now.test(reg));
      }
      previous = now;
    }
    const BitArray settled = filter.collision_bitmap();
    for (const auto& probe : make_keys(50, 30000 + trial)) static_cast<void>(filter.contains(probe));
    EXPECT_EQ(filter.collision_bitmap(), settled);
    for (const auto& key : keys) filter.remove(key);
    EXPECT_EQ(filter.collision_bitmap(), settled);
    EXPECT_LE(filter.bit_counts().data_bits_set, p.data_bits());
  }
}

TEST(PropertyTest, OracleEquivalence) {
  std::mt19937_64 rng(4);
  int instances = 0;
  auto check = [&](const FilterParams& p, std::size_t n, std::uint64_t key_seed) {
    DeletableBloomFilter filter(p);
    ReferenceOracle oracle(p);
    const auto keys = make_keys(n, key_seed);
    for (const auto& key : keys) {
      filter.insert(key);
      oracle.insert(key);
    }
    for (std::uint32_t reg = 0; reg < p.r; ++reg) {
      ASSERT_EQ(filter.region_collided(reg), oracle.marked_regions()[reg]) << p.to_string();
    }
    for (std::uint32_t i = 0; i < p.data_bits(); ++i) {
      ASSERT_EQ(filter.data_bits().test(i), oracle.counters()[i] > 0);
    }
    // Classification before any removal, and the outcome of sequential removal.
    std::vector<RemoveOutcome> expected;
    for (const auto& key : keys) {
      expected.push_back(oracle.classify(key));
      ASSERT_EQ(filter.contains(key), oracle.present(key));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
      ASSERT_EQ(filter.remove(keys[i]), expected[i]) << p.to_string() << " key " << keys[i];
    }
    ++instances;
  };
  for (int i = 0; i < 2000; ++i) {
    check({32, 4, 3, rng()}, uniform(rng, 1, 8), 40000 + i);
  }
  for (int i = 0; i < 8000; ++i) {
    const FilterParams p = random_params(rng);
    check(p, uniform(rng, 1, p.m / 3), 50000 + i);
  }
  EXPECT_EQ(instances, 10000);
}

TEST(PropertyTest, SerializationRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const FilterParams p = random_params(rng);
    DeletableBloomFilter filter(p);
    const auto keys = make_keys(uniform(rng, 0, p.m / 3), 60000 + trial);
    for (const auto& key : keys) filter.insert(key);
    for (std::size_t i = 0; i < keys.size(); i += 2) filter.remove(keys[i]);
    const auto bytes = serialize(filter);
    ASSERT_EQ(bytes.size(), kHeaderSize + (p.r + 7) / 8 + (p.data_bits() + 7) / 8);
    ASSERT_EQ(deserialize(bytes), filter);
  }
}

TEST(PropertyTest, IdenticalInputsGiveIdenticalFilters) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const FilterParams p = random_params(rng);
    const auto keys = make_keys(p.m / 4, 70000 + trial);
    DeletableBloomFilter a(p);
    DeletableBloomFilter b(p);
    for (const auto& key : keys) {
      a.insert(key);
      b.insert(key);
    }
    ASSERT_EQ(serialize(a), serialize(b));
  }
}

}  // namespace
}  // namespace dlbf
