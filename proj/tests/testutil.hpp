// Shared helpers and independent oracles for the test suite. Everything here
// is deliberately written against the math, not against the library code it
// checks.
#ifndef CSIS_TESTUTIL_HPP
#define CSIS_TESTUTIL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace testutil {

// Direct O(B^4) orthonormal DCT-II summation.
inline Eigen::MatrixXd dct2_direct(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  const double pi = 3.14159265358979323846;
  Eigen::MatrixXd out(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          sum += x(i, j) * std::cos((2 * i + 1) * u * pi / (2.0 * n)) *
                 std::cos((2 * j + 1) * v * pi / (2.0 * n));
      const double cu = u == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
      const double cv = v == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
      out(u, v) = cu * cv * sum;
    }
  return out;
}

inline Eigen::MatrixXd idct2_direct(const Eigen::MatrixXd& y) {
  const int n = static_cast<int>(y.rows());
  const double pi = 3.14159265358979323846;
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const double cu = u == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
          const double cv = v == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
          sum += cu * cv * y(u, v) * std::cos((2 * i + 1) * u * pi / (2.0 * n)) *
                 std::cos((2 * j + 1) * v * pi / (2.0 * n));
        }
      out(i, j) = sum;
    }
  return out;
}

// Cyclic coordinate descent for min 0.5||Az-b||^2 + lambda||z||_1, run to a
// much tighter point than the solver under test.
inline Eigen::VectorXd lasso_cd(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double lambda,
                                int max_sweeps = 100000, double tol = 1e-13) {
  const Eigen::Index n = A.cols();
  const Eigen::MatrixXd gram = A.transpose() * A;
  const Eigen::VectorXd atb = A.transpose() * b;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd gz = Eigen::VectorXd::Zero(n);  // gram * z, kept incrementally
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_delta = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double gjj = gram(j, j);
      if (gjj <= 0.0) continue;
      const double r = atb[j] - gz[j] + gjj * z[j];
      double zj = 0.0;
      if (r > lambda) zj = (r - lambda) / gjj;
      else if (r < -lambda) zj = (r + lambda) / gjj;
      const double delta = zj - z[j];
      if (delta != 0.0) {
        gz += delta * gram.col(j);
        z[j] = zj;
        max_delta = std::max(max_delta, std::abs(delta));
      }
    }
    if (max_delta < tol) break;
  }
  return z;
}

inline double lasso_objective_direct(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                     double lambda, const Eigen::VectorXd& z) {
  return 0.5 * (A * z - b).squaredNorm() + lambda * z.lpNorm<1>();
}

inline Eigen::MatrixXd random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

inline Eigen::VectorXd random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

}  // namespace testutil

#endif  // CSIS_TESTUTIL_HPP
