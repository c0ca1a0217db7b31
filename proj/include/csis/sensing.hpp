#ifndef CSIS_SENSING_HPP
#define CSIS_SENSING_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "csis/transform.hpp"

namespace csis {

/// Secret key: everything needed to re-derive the measurement matrices.
struct StegoKey {
  std::uint64_t seed = 0;
  int block_size = 8;
  int p1 = 12;
  int m_size = 37;   // |m|, total measurements per block
  double alpha = 1.0;

  int p2() const { return block_size * block_size - p1; }
  int v_rows() const { return m_size - p1; }

  /// Throws ConfigError unless p1 >= 1, p1 < |m| < B^2 and alpha > 0.
  void validate() const;
};

/// Phi_u = alpha * I (stored implicitly) and the +/-1 matrix Phi_v.
struct MeasurementMatrices {
  double alpha = 1.0;
  Eigen::MatrixXd phi_v;  // (|m|-p1) x p2, entries in {+1,-1}
};

/// One block's measurements: real ordinary samples y_u = alpha*s_u and
/// integer compressed samples y_v = round(Phi_v * s_v).
struct BlockMeasurements {
  Eigen::VectorXd y_u;
  Eigen::VectorXi y_v;

  friend bool operator==(const BlockMeasurements& a, const BlockMeasurements& b) {
    return a.y_u.size() == b.y_u.size() && a.y_v.size() == b.y_v.size() && a.y_u == b.y_u &&
           a.y_v == b.y_v;
  }
};

/// SplitMix64: the fixed PRNG behind key-derived permutations. Keys are
/// portable across implementations as long as this generator is used.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Sylvester Hadamard matrix of order 64 (entries +/-1).
Eigen::MatrixXd hadamard64();

/// Seed-derived Fisher-Yates permutation of {0..n-1}.
std::vector<int> key_permutation(std::uint64_t seed, int n);

/// Derives the measurement matrices from the key: permute the rows of the
/// order-64 Sylvester Hadamard with the seeded Fisher-Yates shuffle, keep the
/// first p2 columns, and select the rows at indices p1..|m|-1 (the rows
/// mapping to the compressed-sensing zigzag ranks). Deterministic in the key.
/// Requires p2 <= 64.
MeasurementMatrices derive_matrices(const StegoKey& key);

BlockMeasurements measure(const SparseBlockVector& sv, const MeasurementMatrices& mm);

/// s'_u = y_u / alpha.
Eigen::VectorXd invert_u(const Eigen::VectorXd& y_u, double alpha);

/// Diagnostic isometry ratio ||Phi_v s_v||^2 / (p2 ||s_v||^2); the p2 factor
/// normalizes the sqrt(p2)-norm Hadamard rows. Errors on a zero v-part.
double rip_ratio(const MeasurementMatrices& mm, const SparseBlockVector& sv);

// Key file: 16-byte magic field "CSISKEY1" (zero-padded), then little-endian
// u64 seed, u16 B, u16 p1, u16 |m|, f32 alpha. 34 bytes total.
std::vector<std::uint8_t> save_key(const StegoKey& key);
StegoKey load_key(std::span<const std::uint8_t> bytes);

}  // namespace csis

#endif  // CSIS_SENSING_HPP
