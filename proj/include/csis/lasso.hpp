#ifndef CSIS_LASSO_HPP
#define CSIS_LASSO_HPP

#include <Eigen/Dense>

namespace csis {

/// Proximal operator of k*|.|: sign(v) * max(|v| - k, 0).
template <typename Scalar>
Scalar soft_threshold(Scalar v, Scalar k) {
  if (v > k) return v - k;
  if (v < -k) return v + k;
  return Scalar(0);
}

/// min over x of 0.5*||A x - b||^2 + lambda*||x||_1.
struct LassoProblem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  double lambda = 1.0;
};

struct AdmmSettings {
  double rho = 1.0;
  double eps_abs = 1e-4;
  double eps_rel = 1e-3;
  int max_iter = 500;
};

struct AdmmResult {
  Eigen::VectorXd solution;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double objective = 0.0;
};

double lasso_objective(const LassoProblem& prob, const Eigen::VectorXd& x);

/// ADMM on the split form min 0.5*||Ax-b||^2 + lambda*||z||_1 s.t. x = z.
/// The (A^T A + rho I) factorization is computed once in the constructor and
/// reused across solves, which is what makes the 4096-block construction
/// cheap: one factorization, thousands of right-hand sides.
class AdmmLassoSolver {
 public:
  AdmmLassoSolver(Eigen::MatrixXd A, double lambda, AdmmSettings settings = {});

  /// Solves for one right-hand side, starting from zeros.
  AdmmResult solve(const Eigen::VectorXd& b) const;

  const Eigen::MatrixXd& matrix() const { return A_; }

 private:
  Eigen::MatrixXd A_;
  double lambda_;
  AdmmSettings settings_;
  Eigen::LLT<Eigen::MatrixXd> gram_llt_;  // of A^T A + rho I
};

AdmmResult admm_lasso(const LassoProblem& prob, const AdmmSettings& settings = {});

}  // namespace csis

#endif  // CSIS_LASSO_HPP
