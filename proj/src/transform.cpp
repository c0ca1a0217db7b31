#include "csis/transform.hpp"

#include <string>

#include "csis/errors.hpp"

namespace csis {

Eigen::MatrixXd dct2(const Eigen::MatrixXd& block) {
  const Eigen::MatrixXd c = dct_matrix(static_cast<int>(block.rows()));
  return c * block * c.transpose();
}

Eigen::MatrixXd idct2(const Eigen::MatrixXd& coeffs) {
  const Eigen::MatrixXd c = dct_matrix(static_cast<int>(coeffs.rows()));
  return c.transpose() * coeffs * c;
}

int ZigzagOrder::rank_of(int row, int col) const {
  for (std::size_t r = 0; r < perm.size(); ++r)
    if (perm[r].first == row && perm[r].second == col) return static_cast<int>(r);
  return -1;
}

ZigzagOrder zigzag_order(int block_size) {
  if (block_size < 1) throw ConfigError("zigzag_order: block size must be >= 1");
  ZigzagOrder order;
  order.block_size = block_size;
  order.perm.reserve(static_cast<std::size_t>(block_size) * block_size);
  for (int d = 0; d <= 2 * (block_size - 1); ++d) {
    const int lo = std::max(0, d - block_size + 1);
    const int hi = std::min(d, block_size - 1);
    if (d % 2 == 0) {
      for (int i = hi; i >= lo; --i) order.perm.emplace_back(i, d - i);  // up-right
    } else {
      for (int i = lo; i <= hi; ++i) order.perm.emplace_back(i, d - i);  // down-left
    }
  }
  return order;
}

SparseBlockVector sparsify(const Eigen::MatrixXd& block, int p1, const ZigzagOrder& order) {
  const int n = order.block_size;
  if (block.rows() != n || block.cols() != n)
    throw ConfigError("sparsify: block does not match zigzag order size");
  if (p1 < 1 || p1 >= n * n)
    throw ConfigError("sparsify: p1 = " + std::to_string(p1) + " outside [1, B^2)");
  const Eigen::MatrixXd grid = dct2(block);
  SparseBlockVector sv;
  sv.p1 = p1;
  sv.coeffs.resize(n * n);
  for (int r = 0; r < n * n; ++r) sv.coeffs[r] = grid(order.perm[r].first, order.perm[r].second);
  return sv;
}

Eigen::MatrixXd densify(const SparseBlockVector& sv, const ZigzagOrder& order) {
  const int n = order.block_size;
  if (sv.coeffs.size() != n * n)
    throw ConfigError("densify: coefficient count does not match zigzag order size");
  Eigen::MatrixXd grid(n, n);
  for (int r = 0; r < n * n; ++r) grid(order.perm[r].first, order.perm[r].second) = sv.coeffs[r];
  return idct2(grid);
}

}  // namespace csis
