#include "csis/des.hpp"

#include <cctype>
#include <stdexcept>

#include "csis/errors.hpp"

namespace csis {
namespace {

// FIPS 46-3 tables, 1-based bit positions counted from the MSB.

constexpr int kIP[64] = {
    58, 50, 42, 34, 26, 18, 10, 2, 60, 52, 44, 36, 28, 20, 12, 4,
    62, 54, 46, 38, 30, 22, 14, 6, 64, 56, 48, 40, 32, 24, 16, 8,
    57, 49, 41, 33, 25, 17, 9,  1, 59, 51, 43, 35, 27, 19, 11, 3,
    61, 53, 45, 37, 29, 21, 13, 5, 63, 55, 47, 39, 31, 23, 15, 7};

constexpr int kFP[64] = {
    40, 8, 48, 16, 56, 24, 64, 32, 39, 7, 47, 15, 55, 23, 63, 31,
    38, 6, 46, 14, 54, 22, 62, 30, 37, 5, 45, 13, 53, 21, 61, 29,
    36, 4, 44, 12, 52, 20, 60, 28, 35, 3, 43, 11, 51, 19, 59, 27,
    34, 2, 42, 10, 50, 18, 58, 26, 33, 1, 41, 9,  49, 17, 57, 25};

constexpr int kE[48] = {32, 1,  2,  3,  4,  5,  4,  5,  6,  7,  8,  9,  8,  9,  10, 11,
                        12, 13, 12, 13, 14, 15, 16, 17, 16, 17, 18, 19, 20, 21, 20, 21,
                        22, 23, 24, 25, 24, 25, 26, 27, 28, 29, 28, 29, 30, 31, 32, 1};

constexpr int kP[32] = {16, 7, 20, 21, 29, 12, 28, 17, 1,  15, 23, 26, 5,  18, 31, 10,
                        2,  8, 24, 14, 32, 27, 3,  9,  19, 13, 30, 6,  22, 11, 4,  25};

constexpr int kPC1[56] = {57, 49, 41, 33, 25, 17, 9,  1,  58, 50, 42, 34, 26, 18,
                          10, 2,  59, 51, 43, 35, 27, 19, 11, 3,  60, 52, 44, 36,
                          63, 55, 47, 39, 31, 23, 15, 7,  62, 54, 46, 38, 30, 22,
                          14, 6,  61, 53, 45, 37, 29, 21, 13, 5,  28, 20, 12, 4};

constexpr int kPC2[48] = {14, 17, 11, 24, 1,  5,  3,  28, 15, 6,  21, 10, 23, 19, 12, 4,
                          26, 8,  16, 7,  27, 20, 13, 2,  41, 52, 31, 37, 47, 55, 30, 40,
                          51, 45, 33, 48, 44, 49, 39, 56, 34, 53, 46, 42, 50, 36, 29, 32};

constexpr int kShifts[16] = {1, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1};

constexpr std::uint8_t kSBox[8][64] = {
    {14, 4,  13, 1, 2,  15, 11, 8,  3,  10, 6,  12, 5,  9,  0, 7,
     0,  15, 7,  4, 14, 2,  13, 1,  10, 6,  12, 11, 9,  5,  3, 8,
     4,  1,  14, 8, 13, 6,  2,  11, 15, 12, 9,  7,  3,  10, 5, 0,
     15, 12, 8,  2, 4,  9,  1,  7,  5,  11, 3,  14, 10, 0,  6, 13},
    {15, 1,  8,  14, 6,  11, 3,  4,  9,  7, 2,  13, 12, 0, 5,  10,
     3,  13, 4,  7,  15, 2,  8,  14, 12, 0, 1,  10, 6,  9, 11, 5,
     0,  14, 7,  11, 10, 4,  13, 1,  5,  8, 12, 6,  9,  3, 2,  15,
     13, 8,  10, 1,  3,  15, 4,  2,  11, 6, 7,  12, 0,  5, 14, 9},
    {10, 0,  9,  14, 6, 3,  15, 5,  1,  13, 12, 7,  11, 4,  2,  8,
     13, 7,  0,  9,  3, 4,  6,  10, 2,  8,  5,  14, 12, 11, 15, 1,
     13, 6,  4,  9,  8, 15, 3,  0,  11, 1,  2,  12, 5,  10, 14, 7,
     1,  10, 13, 0,  6, 9,  8,  7,  4,  15, 14, 3,  11, 5,  2,  12},
    {7,  13, 14, 3, 0,  6,  9,  10, 1,  2, 8, 5,  11, 12, 4,  15,
     13, 8,  11, 5, 6,  15, 0,  3,  4,  7, 2, 12, 1,  10, 14, 9,
     10, 6,  9,  0, 12, 11, 7,  13, 15, 1, 3, 14, 5,  2,  8,  4,
     3,  15, 0,  6, 10, 1,  13, 8,  9,  4, 5, 11, 12, 7,  2,  14},
    {2,  12, 4,  1,  7,  10, 11, 6,  8,  5,  3,  15, 13, 0, 14, 9,
     14, 11, 2,  12, 4,  7,  13, 1,  5,  0,  15, 10, 3,  9, 8,  6,
     4,  2,  1,  11, 10, 13, 7,  8,  15, 9,  12, 5,  6,  3, 0,  14,
     11, 8,  12, 7,  1,  14, 2,  13, 6,  15, 0,  9,  10, 4, 5,  3},
    {12, 1,  10, 15, 9, 2,  6,  8,  0,  13, 3,  4,  14, 7,  5,  11,
     10, 15, 4,  2,  7, 12, 9,  5,  6,  1,  13, 14, 0,  11, 3,  8,
     9,  14, 15, 5,  2, 8,  12, 3,  7,  0,  4,  10, 1,  13, 11, 6,
     4,  3,  2,  12, 9, 5,  15, 10, 11, 14, 1,  7,  6,  0,  8,  13},
    {4,  11, 2,  14, 15, 0, 8,  13, 3,  12, 9, 7,  5,  10, 6, 1,
     13, 0,  11, 7,  4,  9, 1,  10, 14, 3,  5, 12, 2,  15, 8, 6,
     1,  4,  11, 13, 12, 3, 7,  14, 10, 15, 6, 8,  0,  5,  9, 2,
     6,  11, 13, 8,  1,  4, 10, 7,  9,  5,  0, 15, 14, 2,  3, 12},
    {13, 2,  8,  4, 6,  15, 11, 1,  10, 9,  3,  14, 5,  0,  12, 7,
     1,  15, 13, 8, 10, 3,  7,  4,  12, 5,  6,  11, 0,  14, 9,  2,
     7,  11, 4,  1, 9,  12, 14, 2,  0,  6,  10, 13, 15, 3,  5,  8,
     2,  1,  14, 7, 4,  10, 8,  13, 15, 12, 9,  0,  3,  5,  6,  11}};

// Gathers out_width bits of `in` (in_width wide, MSB first) per `table`.
std::uint64_t permute(std::uint64_t in, int in_width, const int* table, int out_width) {
  std::uint64_t out = 0;
  for (int i = 0; i < out_width; ++i)
    out = (out << 1) | ((in >> (in_width - table[i])) & 1ULL);
  return out;
}

std::uint32_t rotl28(std::uint32_t v, int n) {
  return ((v << n) | (v >> (28 - n))) & 0x0fffffffu;
}

std::uint32_t feistel_f(std::uint32_t r, std::uint64_t subkey) {
  const std::uint64_t x = permute(r, 32, kE, 48) ^ subkey;
  std::uint32_t s_out = 0;
  for (int i = 0; i < 8; ++i) {
    const unsigned six = static_cast<unsigned>((x >> (42 - 6 * i)) & 0x3f);
    const unsigned row = ((six >> 4) & 2) | (six & 1);
    const unsigned col = (six >> 1) & 0xf;
    s_out = (s_out << 4) | kSBox[i][row * 16 + col];
  }
  return static_cast<std::uint32_t>(permute(s_out, 32, kP, 32));
}

}  // namespace

DesKey DesKey::from_hex(const std::string& hex) {
  if (hex.size() != 16) throw ConfigError("DES key: expected 16 hex characters");
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw ConfigError("DES key: invalid hex character");
    v = (v << 4) | static_cast<unsigned>(d);
  }
  return DesKey{v};
}

DesSchedule::DesSchedule(const DesKey& key) {
  const std::uint64_t cd = permute(key.bits, 64, kPC1, 56);
  std::uint32_t c = static_cast<std::uint32_t>(cd >> 28);
  std::uint32_t d = static_cast<std::uint32_t>(cd & 0x0fffffffULL);
  for (int round = 0; round < 16; ++round) {
    c = rotl28(c, kShifts[round]);
    d = rotl28(d, kShifts[round]);
    subkeys_[round] = permute((static_cast<std::uint64_t>(c) << 28) | d, 56, kPC2, 48);
  }
}

std::uint64_t DesSchedule::feistel(std::uint64_t block, bool decrypt) const {
  const std::uint64_t ip = permute(block, 64, kIP, 64);
  std::uint32_t l = static_cast<std::uint32_t>(ip >> 32);
  std::uint32_t r = static_cast<std::uint32_t>(ip);
  for (int round = 0; round < 16; ++round) {
    const std::uint64_t k = subkeys_[decrypt ? 15 - round : round];
    const std::uint32_t next = l ^ feistel_f(r, k);
    l = r;
    r = next;
  }
  // preoutput swaps halves: R16 || L16
  const std::uint64_t pre = (static_cast<std::uint64_t>(r) << 32) | l;
  return permute(pre, 64, kFP, 64);
}

std::uint64_t DesSchedule::encrypt(std::uint64_t block) const { return feistel(block, false); }
std::uint64_t DesSchedule::decrypt(std::uint64_t block) const { return feistel(block, true); }

std::uint64_t des_encrypt_block(std::uint64_t block, const DesKey& key) {
  return DesSchedule(key).encrypt(block);
}

std::uint64_t des_decrypt_block(std::uint64_t block, const DesKey& key) {
  return DesSchedule(key).decrypt(block);
}

namespace {

std::uint64_t block_from_bits(const BitString& bits, std::size_t offset) {
  std::uint64_t v = 0;
  for (int i = 0; i < 64; ++i) v = (v << 1) | static_cast<unsigned>(bits[offset + i]);
  return v;
}

void append_block_bits(BitString& bits, std::uint64_t block) {
  for (int i = 63; i >= 0; --i) bits.push_back((block >> i) & 1);
}

}  // namespace

BitString encrypt_payload(const BitString& payload, const DesKey& key) {
  BitString frame;
  append_block_bits(frame, static_cast<std::uint64_t>(payload.size()));
  frame.append(payload);
  while (frame.size() % 64 != 0) frame.push_back(0);

  const DesSchedule sched(key);
  BitString ct;
  for (std::size_t off = 0; off < frame.size(); off += 64)
    append_block_bits(ct, sched.encrypt(block_from_bits(frame, off)));
  return ct;
}

BitString decrypt_payload(const BitString& stream, const DesKey& key) {
  if (stream.size() < 64) throw FramingError("decrypt_payload: stream shorter than one block");
  const DesSchedule sched(key);
  const std::uint64_t bit_length = sched.decrypt(block_from_bits(stream, 0));
  const std::uint64_t payload_blocks = (bit_length + 63) / 64;
  if (payload_blocks > stream.size() / 64 - 1)
    throw FramingError("decrypt_payload: framed length " + std::to_string(bit_length) +
                       " bits exceeds the stream (wrong key or corrupted stego-data)");
  BitString payload;
  for (std::uint64_t b = 0; b < payload_blocks; ++b)
    append_block_bits(payload, sched.decrypt(block_from_bits(stream, 64 * (b + 1))));
  return payload.prefix(static_cast<std::size_t>(bit_length));
}

}  // namespace csis
