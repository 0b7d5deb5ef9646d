#include "dlbf/bit_array.hpp"

#include <bit>
#include <string>

#include "dlbf/errors.hpp"

namespace dlbf {

BitArray::BitArray(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

void BitArray::check(std::size_t i) const {
  if (i >= length_) {
    throw ContractError("bit index " + std::to_string(i) + " out of range [0, " +
                        std::to_string(length_) + ")");
  }
}

bool BitArray::test(std::size_t i) const {
  check(i);
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void BitArray::set(std::size_t i) {
  check(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void BitArray::reset(std::size_t i) {
  check(i);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool BitArray::test_and_set(std::size_t i) {
  check(i);
  std::uint64_t& word = words_[i / 64];
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  const bool was_set = (word & mask) != 0;
  word |= mask;
  return was_set;
}

std::size_t BitArray::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void BitArray::write_bytes(std::vector<std::uint8_t>& out) const {
  const std::size_t nbytes = byte_size();
  for (std::size_t b = 0; b < nbytes; ++b) {
    out.push_back(static_cast<std::uint8_t>(words_[b / 8] >> (8 * (b % 8))));
  }
}

bool BitArray::read_bytes(std::span<const std::uint8_t> bytes, std::size_t length, BitArray& out) {
  BitArray result(length);
  for (std::size_t b = 0; b < bytes.size(); ++b) {
    result.words_[b / 8] |= std::uint64_t{bytes[b]} << (8 * (b % 8));
  }
  if (length % 8 != 0 && !bytes.empty()) {
    const std::uint8_t padding = static_cast<std::uint8_t>(0xFFU << (length % 8));
    if ((bytes.back() & padding) != 0) return false;
  }
  out = std::move(result);
  return true;
}

}  // namespace dlbf
