#ifndef CSIS_DES_HPP
#define CSIS_DES_HPP

#include <array>
#include <cstdint>
#include <string>

#include "csis/bitstring.hpp"

namespace csis {

/// 64-bit DES key (56 effective bits; parity bits are ignored).
struct DesKey {
  std::uint64_t bits = 0;

  /// Parses exactly 16 hex characters.
  static DesKey from_hex(const std::string& hex);
};

/// Precomputed schedule of the 16 round subkeys.
class DesSchedule {
 public:
  explicit DesSchedule(const DesKey& key);
  std::uint64_t encrypt(std::uint64_t block) const;
  std::uint64_t decrypt(std::uint64_t block) const;

 private:
  std::uint64_t feistel(std::uint64_t block, bool decrypt) const;
  std::array<std::uint64_t, 16> subkeys_{};  // 48-bit values
};

std::uint64_t des_encrypt_block(std::uint64_t block, const DesKey& key);
std::uint64_t des_decrypt_block(std::uint64_t block, const DesKey& key);

/// Frames the payload as (64-bit big-endian bit count || payload || zero pad
/// to a 64-bit boundary) and ECB-encrypts it. Ciphertext length is
/// 64*ceil((64+L)/64) bits.
BitString encrypt_payload(const BitString& payload, const DesKey& key);

/// Inverse of encrypt_payload. The stream may carry trailing garbage beyond
/// the framed ciphertext; it is ignored. Throws FramingError when the
/// decrypted bit count implies more blocks than the stream holds (wrong key
/// or corrupted stego-data).
BitString decrypt_payload(const BitString& stream, const DesKey& key);

}  // namespace csis

#endif  // CSIS_DES_HPP
