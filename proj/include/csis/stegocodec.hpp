#ifndef CSIS_STEGOCODEC_HPP
#define CSIS_STEGOCODEC_HPP

#include <cstdint>
#include <vector>

#include "csis/bitstring.hpp"
#include "csis/sensing.hpp"

namespace csis {

/// Two-bit symbol, value = (first bit << 1) | second bit, so "10" == 2.
using Dibit = std::uint8_t;

/// Euclidean modulo: result always in [0, m).
inline int euclid_mod(long long v, int m) {
  int r = static_cast<int>(v % m);
  return r < 0 ? r + m : r;
}

/// Embedding never touches measurements in the skip set {-1, 0, +1}.
inline bool is_permissible(int y) { return y < -1 || y > 1; }

/// Embeds one dibit into a permissible measurement. Guarantees |z - y| <= 3,
/// z stays permissible, and extract_pair(z) == s. The y%4==0, s=11 branch may
/// move either way; ties move away from zero.
int embed_pair(int y, Dibit s);

/// Recovers the dibit from a permissible measurement: residue of z mod 4
/// (Euclidean) maps 0->01, 1->00, 2->11, 3->10.
Dibit extract_pair(int z);

/// Maximum payload bits: two per permissible y_v entry.
std::size_t capacity(const std::vector<BlockMeasurements>& measurements);

/// Embeds the payload dibits MSB-first into permissible y_v entries, walking
/// blocks in ascending order and entries in ascending index. Entries beyond
/// the payload (and all y_u) are left untouched. Payload length must be even
/// and within capacity.
std::vector<BlockMeasurements> embed_stream(const BitString& payload,
                                            const std::vector<BlockMeasurements>& measurements);

/// Reads two bits from every permissible entry in embedding order.
BitString extract_stream(const std::vector<BlockMeasurements>& measurements);

/// Bit error rate in percent; lengths must match.
double ber(const BitString& a, const BitString& b);

/// Fractions of increased / decreased entries among those that changed.
struct AddSubProfile {
  double p_add = 0.0;
  double p_sub = 0.0;
  std::size_t modified = 0;
};

AddSubProfile add_sub_profile(const std::vector<BlockMeasurements>& before,
                              const std::vector<BlockMeasurements>& after);

}  // namespace csis

#endif  // CSIS_STEGOCODEC_HPP
