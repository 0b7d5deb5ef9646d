#include "dlbf/serialization.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "dlbf/errors.hpp"
#include "test_util.hpp"

namespace dlbf {
namespace {

using ::dlbf::testing::make_keys;

ParseErrc parse_code(std::vector<std::uint8_t> bytes) {
  try {
    static_cast<void>(deserialize(bytes));
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "payload parsed";
  return ParseErrc::kBadMagic;
}

TEST(SerializationTest, EmptyFilterLayout) {
  const DeletableBloomFilter filter({240, 24, 5, 42});
  const auto bytes = serialize(filter);
  ASSERT_EQ(bytes.size(), kHeaderSize + 3 + 27);
  const std::vector<std::uint8_t> header{'D', 'L', 'B', 'F', 0x01, 0x01,
                                         240, 0, 0, 0,           // m
                                         24, 0, 0, 0,            // r
                                         5, 0, 0, 0,             // k
                                         42, 0, 0, 0, 0, 0, 0, 0};  // seed
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  for (std::size_t i = kHeaderSize; i < bytes.size(); ++i) EXPECT_EQ(bytes[i], 0);
}

TEST(SerializationTest, BitPositionsAreLsbFirst) {
  DeletableBloomFilter filter({240, 24, 5, 0x0102030405060708ULL});
  filter.insert("x");
  const auto bytes = serialize(filter);
  EXPECT_EQ(bytes[18], 0x08);
  EXPECT_EQ(bytes[25], 0x01);
  const std::size_t data = kHeaderSize + 3;
  for (std::uint32_t idx : filter.indices("x")) {
    EXPECT_TRUE(bytes[data + idx / 8] & (1U << (idx % 8))) << idx;
  }
}

TEST(SerializationTest, RoundTripPreservesEverything) {
  DeletableBloomFilter filter({101, 7, 4, 0xdeadbeefcafef00dULL});
  for (const auto& key : make_keys(25, 1)) filter.insert(key);
  ASSERT_GT(filter.bit_counts().bitmap_bits_set, 0U);
  const auto bytes = serialize(filter);
  const DeletableBloomFilter back = deserialize(bytes);
  EXPECT_EQ(back, filter);
  EXPECT_EQ(serialize(back), bytes);
}

TEST(SerializationTest, DistinctParseErrors) {
  const auto good = serialize(DeletableBloomFilter({240, 24, 5, 42}));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_EQ(parse_code(bad_magic), ParseErrc::kBadMagic);
  EXPECT_EQ(parse_code({}), ParseErrc::kBadMagic);

  auto bad_version = good;
  bad_version[4] = 0x02;
  EXPECT_EQ(parse_code(bad_version), ParseErrc::kUnsupportedVersion);

  auto bad_scheme = good;
  bad_scheme[5] = 0x07;
  EXPECT_EQ(parse_code(bad_scheme), ParseErrc::kUnknownHashScheme);

  EXPECT_EQ(parse_code({good.begin(), good.begin() + 10}), ParseErrc::kTruncated);
  EXPECT_EQ(parse_code({good.begin(), good.end() - 1}), ParseErrc::kTruncated);

  auto trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(parse_code(trailing), ParseErrc::kTrailingBytes);

  auto r_too_big = good;
  r_too_big[10] = 240;  // r = m
  EXPECT_EQ(parse_code(r_too_big), ParseErrc::kInconsistentDimensions);

  auto zero_k = good;
  zero_k[14] = 0;
  EXPECT_EQ(parse_code(zero_k), ParseErrc::kInconsistentDimensions);
}

TEST(SerializationTest, RejectsNonzeroPadding) {
  // r = 12 leaves four padding bits in the second bitmap byte.
  auto bytes = serialize(DeletableBloomFilter({100, 12, 3, 1}));
  bytes[kHeaderSize + 1] = 0x80;
  EXPECT_EQ(parse_code(bytes), ParseErrc::kNonzeroPadding);
}

TEST(SerializationTest, FileRoundTripAndAtomicReplace) {
  const auto dir = std::filesystem::temp_directory_path() / "dlbf_serialization_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "filter.dlbf";

  DeletableBloomFilter filter({240, 24, 5, 42});
  save_filter(path, filter);
  filter.insert("x");
  save_filter(path, filter);
  EXPECT_EQ(load_filter(path), filter);
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));

  std::ofstream(dir / "garbage.dlbf", std::ios::binary) << "not a filter";
  EXPECT_THROW(load_filter(dir / "garbage.dlbf"), ParseError);
  EXPECT_THROW(load_filter(dir / "missing.dlbf"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace dlbf
