#include "csis/lasso.hpp"

#include <cmath>
#include <string>

#include "csis/errors.hpp"

namespace csis {

double lasso_objective(const LassoProblem& prob, const Eigen::VectorXd& x) {
  if (x.size() != prob.A.cols()) throw ConfigError("lasso_objective: dimension mismatch");
  return 0.5 * (prob.A * x - prob.b).squaredNorm() + prob.lambda * x.lpNorm<1>();
}

AdmmLassoSolver::AdmmLassoSolver(Eigen::MatrixXd A, double lambda, AdmmSettings settings)
    : A_(std::move(A)), lambda_(lambda), settings_(settings) {
  if (!(lambda_ > 0.0)) throw ConfigError("admm_lasso: lambda must be positive");
  if (!(settings_.rho > 0.0) || !(settings_.eps_abs > 0.0) || !(settings_.eps_rel > 0.0) ||
      settings_.max_iter < 1)
    throw ConfigError("admm_lasso: settings must be positive with max_iter >= 1");
  Eigen::MatrixXd gram = A_.transpose() * A_;
  gram.diagonal().array() += settings_.rho;
  gram_llt_.compute(gram);
  if (gram_llt_.info() != Eigen::Success)
    throw NumericError("admm_lasso: factorization of A^T A + rho I failed");
}

AdmmResult AdmmLassoSolver::solve(const Eigen::VectorXd& b) const {
  if (b.size() != A_.rows()) throw ConfigError("admm_lasso: b does not match A");
  const Eigen::Index n = A_.cols();
  const double rho = settings_.rho;
  const double thresh = lambda_ / rho;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const Eigen::VectorXd atb = A_.transpose() * b;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);

  AdmmResult result;
  for (int it = 1; it <= settings_.max_iter; ++it) {
    x = gram_llt_.solve(atb + rho * (z - u));
    Eigen::VectorXd z_prev = std::move(z);
    z = (x + u).unaryExpr([thresh](double v) { return soft_threshold(v, thresh); });
    u += x - z;

    if (!x.allFinite() || !z.allFinite())
      throw NumericError("admm_lasso: non-finite iterate at iteration " + std::to_string(it));

    result.iterations = it;
    result.primal_residual = (x - z).norm();
    result.dual_residual = rho * (z - z_prev).norm();
    const double eps_pri =
        sqrt_n * settings_.eps_abs + settings_.eps_rel * std::max(x.norm(), z.norm());
    const double eps_dual = sqrt_n * settings_.eps_abs + settings_.eps_rel * rho * u.norm();
    if (result.primal_residual <= eps_pri && result.dual_residual <= eps_dual) break;
  }
  result.solution = std::move(z);
  result.objective = 0.5 * (A_ * result.solution - b).squaredNorm() +
                     lambda_ * result.solution.lpNorm<1>();
  return result;
}

AdmmResult admm_lasso(const LassoProblem& prob, const AdmmSettings& settings) {
  if (prob.b.size() != prob.A.rows()) throw ConfigError("admm_lasso: b does not match A");
  return AdmmLassoSolver(prob.A, prob.lambda, settings).solve(prob.b);
}

}  // namespace csis
