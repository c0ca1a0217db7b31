#include "csis/sensing.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "csis/errors.hpp"

namespace csis {
namespace {

constexpr char kKeyMagic[8] = {'C', 'S', 'I', 'S', 'K', 'E', 'Y', '1'};
constexpr std::size_t kKeyMagicField = 16;  // magic zero-padded to 16 bytes
constexpr std::size_t kKeyFileSize = kKeyMagicField + 8 + 2 + 2 + 2 + 4;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back(v >> 8);
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t pos) {
  return static_cast<std::uint16_t>(b[pos] | (b[pos + 1] << 8));
}

std::uint64_t get_u64(std::span<const std::uint8_t> b, std::size_t pos) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[pos + i];
  return v;
}

}  // namespace

void StegoKey::validate() const {
  if (block_size < 1) throw ConfigError("key: block size must be >= 1");
  if (p1 < 1 || !(p1 < m_size && m_size < block_size * block_size))
    throw ConfigError("key: requires 1 <= p1 < |m| < B^2, got p1=" + std::to_string(p1) +
                      " |m|=" + std::to_string(m_size) + " B=" + std::to_string(block_size));
  if (!(alpha > 0.0)) throw ConfigError("key: alpha must be positive");
}

Eigen::MatrixXd hadamard64() {
  Eigen::MatrixXd h(1, 1);
  h(0, 0) = 1.0;
  while (h.rows() < 64) {
    const auto n = h.rows();
    Eigen::MatrixXd next(2 * n, 2 * n);
    next.topLeftCorner(n, n) = h;
    next.topRightCorner(n, n) = h;
    next.bottomLeftCorner(n, n) = h;
    next.bottomRightCorner(n, n) = -h;
    h = std::move(next);
  }
  return h;
}

std::vector<int> key_permutation(std::uint64_t seed, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  SplitMix64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

MeasurementMatrices derive_matrices(const StegoKey& key) {
  key.validate();
  if (key.p2() > 64)
    throw ConfigError("derive_matrices: p2 = " + std::to_string(key.p2()) +
                      " exceeds the order-64 Hadamard (block size too large)");
  const Eigen::MatrixXd h = hadamard64();
  const std::vector<int> perm = key_permutation(key.seed, 64);
  MeasurementMatrices mm;
  mm.alpha = key.alpha;
  mm.phi_v.resize(key.v_rows(), key.p2());
  for (int r = 0; r < key.v_rows(); ++r)
    mm.phi_v.row(r) = h.row(perm[key.p1 + r]).head(key.p2());
  return mm;
}

BlockMeasurements measure(const SparseBlockVector& sv, const MeasurementMatrices& mm) {
  const Eigen::Index p2 = mm.phi_v.cols();
  if (sv.v().size() != p2 || sv.p1 < 1)
    throw ConfigError("measure: block vector partition does not match matrices");
  BlockMeasurements out;
  out.y_u = mm.alpha * sv.u();
  const Eigen::VectorXd raw = mm.phi_v * sv.v();
  out.y_v.resize(raw.size());
  for (Eigen::Index i = 0; i < raw.size(); ++i)
    out.y_v[i] = static_cast<int>(std::lround(raw[i]));  // half away from zero
  return out;
}

Eigen::VectorXd invert_u(const Eigen::VectorXd& y_u, double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("invert_u: alpha must be positive");
  return y_u / alpha;
}

double rip_ratio(const MeasurementMatrices& mm, const SparseBlockVector& sv) {
  const double denom = sv.v().squaredNorm();
  if (denom == 0.0) throw ConfigError("rip_ratio: zero v-part");
  return (mm.phi_v * sv.v()).squaredNorm() / (static_cast<double>(mm.phi_v.cols()) * denom);
}

std::vector<std::uint8_t> save_key(const StegoKey& key) {
  key.validate();
  std::vector<std::uint8_t> out;
  out.reserve(kKeyFileSize);
  out.insert(out.end(), kKeyMagic, kKeyMagic + sizeof(kKeyMagic));
  out.resize(kKeyMagicField, 0);
  put_u64(out, key.seed);
  put_u16(out, static_cast<std::uint16_t>(key.block_size));
  put_u16(out, static_cast<std::uint16_t>(key.p1));
  put_u16(out, static_cast<std::uint16_t>(key.m_size));
  const float a = static_cast<float>(key.alpha);
  std::uint32_t abits;
  std::memcpy(&abits, &a, 4);
  for (int i = 0; i < 4; ++i) out.push_back((abits >> (8 * i)) & 0xff);
  return out;
}

StegoKey load_key(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kKeyFileSize) throw FormatError("key file: expected 34 bytes");
  if (std::memcmp(bytes.data(), kKeyMagic, sizeof(kKeyMagic)) != 0)
    throw FormatError("key file: bad magic");
  for (std::size_t i = sizeof(kKeyMagic); i < kKeyMagicField; ++i)
    if (bytes[i] != 0) throw FormatError("key file: bad magic padding");
  StegoKey key;
  key.seed = get_u64(bytes, kKeyMagicField);
  key.block_size = get_u16(bytes, kKeyMagicField + 8);
  key.p1 = get_u16(bytes, kKeyMagicField + 10);
  key.m_size = get_u16(bytes, kKeyMagicField + 12);
  std::uint32_t abits = 0;
  for (int i = 3; i >= 0; --i) abits = (abits << 8) | bytes[kKeyMagicField + 14 + i];
  float a;
  std::memcpy(&a, &abits, 4);
  key.alpha = a;
  key.validate();
  return key;
}

}  // namespace csis
