#ifndef CSIS_BITSTRING_HPP
#define CSIS_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace csis {

/// Ordered sequence of bits. Serialized forms pack MSB-first: bit 0 of the
/// string is the most significant bit of byte 0.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n, int fill = 0) : bits_(n, fill ? 1 : 0) {}

  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  /// Parses a string of '0'/'1' characters.
  static BitString from_string(const std::string& s);

  /// Packs MSB-first; the last byte is zero-padded when size()%8 != 0.
  std::vector<std::uint8_t> to_bytes() const;
  std::string to_string() const;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, int v) { bits_[i] = v ? 1 : 0; }
  void push_back(int v) { bits_.push_back(v ? 1 : 0); }
  void append(const BitString& other);
  BitString prefix(std::size_t n) const;
  BitString slice(std::size_t begin, std::size_t len) const;

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  std::vector<std::uint8_t> bits_;  // one bit per element, values 0/1
};

/// Number of differing bits; sizes must match.
std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace csis

#endif  // CSIS_BITSTRING_HPP
