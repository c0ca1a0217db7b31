#include "csis/bitstring.hpp"

#include <stdexcept>

namespace csis {

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.bits_.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes)
    for (int i = 7; i >= 0; --i) out.bits_.push_back((b >> i) & 1);
  return out;
}

BitString BitString::from_string(const std::string& s) {
  BitString out;
  out.bits_.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("BitString::from_string: expected only '0'/'1'");
    out.bits_.push_back(c == '1');
  }
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::prefix(std::size_t n) const { return slice(0, n); }

BitString BitString::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > bits_.size()) throw std::out_of_range("BitString::slice: out of range");
  BitString out;
  out.bits_.assign(bits_.begin() + begin, bits_.begin() + begin + len);
  return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace csis
