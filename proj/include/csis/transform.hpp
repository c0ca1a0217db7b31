#ifndef CSIS_TRANSFORM_HPP
#define CSIS_TRANSFORM_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace csis {

/// Orthonormal DCT-II basis matrix of order n:
/// C(0,j) = sqrt(1/n), C(k,j) = sqrt(2/n) cos(pi (2j+1) k / (2n)).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dct_matrix(int n) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> c(n, n);
  const Scalar pi = static_cast<Scalar>(3.14159265358979323846L);
  for (int k = 0; k < n; ++k) {
    Scalar scale = std::sqrt((k == 0 ? Scalar(1) : Scalar(2)) / Scalar(n));
    for (int j = 0; j < n; ++j)
      c(k, j) = scale * std::cos(pi * Scalar(2 * j + 1) * Scalar(k) / Scalar(2 * n));
  }
  return c;
}

/// 2-D orthonormal DCT-II of a square block: C * X * C^T. Energy preserving.
Eigen::MatrixXd dct2(const Eigen::MatrixXd& block);

/// Inverse 2-D DCT: C^T * Y * C.
Eigen::MatrixXd idct2(const Eigen::MatrixXd& coeffs);

/// Zigzag scan of the B x B coefficient grid. Rank 0 is DC; ranks walk the
/// anti-diagonals in the JPEG order, low to high frequency.
struct ZigzagOrder {
  int block_size = 0;
  std::vector<std::pair<int, int>> perm;  // rank -> (row, col)

  int rank_of(int row, int col) const;
};

ZigzagOrder zigzag_order(int block_size);

/// One block's DCT coefficients in zigzag rank order, split at p1 into the
/// low-frequency u-part and the remaining v-part.
struct SparseBlockVector {
  Eigen::VectorXd coeffs;  // length B^2, zigzag rank order
  int p1 = 0;

  auto u() const { return coeffs.head(p1); }
  auto v() const { return coeffs.tail(coeffs.size() - p1); }
};

SparseBlockVector sparsify(const Eigen::MatrixXd& block, int p1, const ZigzagOrder& order);
Eigen::MatrixXd densify(const SparseBlockVector& sv, const ZigzagOrder& order);

}  // namespace csis

#endif  // CSIS_TRANSFORM_HPP
