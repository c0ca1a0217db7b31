#include "csis/stegocodec.hpp"

#include <stdexcept>
#include <string>

#include "csis/errors.hpp"

namespace csis {

int embed_pair(int y, Dibit s) {
  if (!is_permissible(y)) throw std::invalid_argument("embed_pair: y in skip set {-1,0,1}");
  if (s > 3) throw std::invalid_argument("embed_pair: dibit out of range");
  switch (euclid_mod(y, 4)) {
    case 0:  // even, y % 4 == 0
      switch (s) {
        case 0: return y + 1;
        case 1: return y;
        case 2: return y - 1;
        default: return y > 0 ? y + 2 : y - 2;
      }
    case 2:  // even, y % 4 == 2; +/-2 need detours around the skip set
      switch (s) {
        case 0: return y != 2 ? y - 1 : y + 3;
        case 1: return y != -2 ? y + 2 : y - 2;
        case 2: return y != -2 ? y + 1 : y - 3;
        default: return y;
      }
    case 1:  // odd, y % 4 == 1
      switch (s) {
        case 0: return y;
        case 1: return y - 1;
        case 2: return y - 2;
        default: return y + 1;
      }
    default:  // odd, y % 4 == 3
      switch (s) {
        case 0: return y + 2;
        case 1: return y + 1;
        case 2: return y;
        default: return y - 1;
      }
  }
}

Dibit extract_pair(int z) {
  if (!is_permissible(z)) throw std::invalid_argument("extract_pair: z in skip set {-1,0,1}");
  switch (euclid_mod(z, 4)) {
    case 0: return 1;   // 01
    case 1: return 0;   // 00
    case 2: return 3;   // 11
    default: return 2;  // 10
  }
}

std::size_t capacity(const std::vector<BlockMeasurements>& measurements) {
  std::size_t permissible = 0;
  for (const BlockMeasurements& m : measurements)
    for (Eigen::Index i = 0; i < m.y_v.size(); ++i) permissible += is_permissible(m.y_v[i]);
  return 2 * permissible;
}

std::vector<BlockMeasurements> embed_stream(const BitString& payload,
                                            const std::vector<BlockMeasurements>& measurements) {
  if (payload.size() % 2 != 0)
    throw CapacityError("embed_stream: payload bit count must be even");
  const std::size_t cap = capacity(measurements);
  if (payload.size() > cap)
    throw CapacityError("embed_stream: payload needs " + std::to_string(payload.size()) +
                        " bits but capacity is " + std::to_string(cap));
  std::vector<BlockMeasurements> out = measurements;
  std::size_t next = 0;
  for (BlockMeasurements& m : out) {
    for (Eigen::Index i = 0; i < m.y_v.size() && next < payload.size(); ++i) {
      if (!is_permissible(m.y_v[i])) continue;
      const Dibit s = static_cast<Dibit>((payload[next] << 1) | payload[next + 1]);
      m.y_v[i] = embed_pair(m.y_v[i], s);
      next += 2;
    }
    if (next >= payload.size()) break;
  }
  return out;
}

BitString extract_stream(const std::vector<BlockMeasurements>& measurements) {
  BitString bits;
  for (const BlockMeasurements& m : measurements)
    for (Eigen::Index i = 0; i < m.y_v.size(); ++i) {
      if (!is_permissible(m.y_v[i])) continue;
      const Dibit s = extract_pair(m.y_v[i]);
      bits.push_back((s >> 1) & 1);
      bits.push_back(s & 1);
    }
  return bits;
}

double ber(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ber: length mismatch");
  if (a.empty()) return 0.0;
  return 100.0 * static_cast<double>(hamming_distance(a, b)) / static_cast<double>(a.size());
}

AddSubProfile add_sub_profile(const std::vector<BlockMeasurements>& before,
                              const std::vector<BlockMeasurements>& after) {
  if (before.size() != after.size()) throw std::invalid_argument("add_sub_profile: shape mismatch");
  std::size_t added = 0, subtracted = 0;
  for (std::size_t k = 0; k < before.size(); ++k) {
    if (before[k].y_v.size() != after[k].y_v.size())
      throw std::invalid_argument("add_sub_profile: shape mismatch");
    for (Eigen::Index i = 0; i < before[k].y_v.size(); ++i) {
      if (after[k].y_v[i] > before[k].y_v[i]) ++added;
      if (after[k].y_v[i] < before[k].y_v[i]) ++subtracted;
    }
  }
  AddSubProfile p;
  p.modified = added + subtracted;
  if (p.modified > 0) {
    p.p_add = static_cast<double>(added) / static_cast<double>(p.modified);
    p.p_sub = static_cast<double>(subtracted) / static_cast<double>(p.modified);
  }
  return p;
}

}  // namespace csis
