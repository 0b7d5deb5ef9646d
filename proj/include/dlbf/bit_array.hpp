#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dlbf {

// Fixed-length packed bit vector. Bit i lives in word i / 64 at offset i % 64,
// which gives the LSB-first byte order used by the file format when the words
// are written out little-endian.
class BitArray {
 public:
  BitArray() = default;
  explicit BitArray(std::size_t length);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }

  [[nodiscard]] bool test(std::size_t i) const;
  void set(std::size_t i);
  void reset(std::size_t i);
  /// Sets bit i and returns its previous value.
  bool test_and_set(std::size_t i);

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool none() const noexcept { return count() == 0; }

  [[nodiscard]] std::size_t byte_size() const noexcept { return (length_ + 7) / 8; }
  void write_bytes(std::vector<std::uint8_t>& out) const;
  /// Builds an array of `length` bits from exactly byte_size() bytes.
  /// Returns false if any padding bit past `length` is set.
  static bool read_bytes(std::span<const std::uint8_t> bytes, std::size_t length, BitArray& out);

  friend bool operator==(const BitArray&, const BitArray&) = default;

 private:
  void check(std::size_t i) const;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dlbf
