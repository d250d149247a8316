#include "netband/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netband/rng.hpp"

namespace netband {

Eigen::VectorXd one_hot_estimate(const BatchData& batch, int j) {
  if (batch.n() < 1) throw std::invalid_argument("empty batch");
  return batch.rewards.transpose() * batch.actions.col(j) /
         static_cast<double>(batch.n());
}

double theta_full_support(
    const Eigen::VectorXd& xhat_col,
    const Eigen::Array<bool, Eigen::Dynamic, 1>& support_col) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < xhat_col.size(); ++i) {
    if (support_col[i]) sum += xhat_col[i];
  }
  return sum;
}

double theta_hard_threshold(const Eigen::VectorXd& xhat_col, double tau) {
  if (tau < 0) throw std::invalid_argument("tau must be >= 0");
  const double cutoff = tau / 8.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < xhat_col.size(); ++i) {
    if (std::abs(xhat_col[i]) > cutoff) sum += xhat_col[i];
  }
  return sum;
}

Eigen::VectorXd restricted_ols(const BatchData& batch, int i,
                               const std::vector<int>& allowed) {
  const Eigen::Index n = batch.n();
  const Eigen::Index d = batch.d();
  Eigen::VectorXd coef = Eigen::VectorXd::Zero(d);
  const Eigen::Index p = static_cast<Eigen::Index>(allowed.size());
  if (p == 0) return coef;
  if (n < 1) throw std::invalid_argument("empty batch");
  if (n < p + 1) {
    throw SingularDesignError(
        "centered design cannot determine " + std::to_string(p) +
        " coefficients from " + std::to_string(n) + " rounds");
  }

  Eigen::MatrixXd design(n, p);
  for (Eigen::Index k = 0; k < p; ++k) design.col(k) = batch.actions.col(allowed[k]);
  design.rowwise() -= design.colwise().mean();

  Eigen::VectorXd y = batch.rewards.col(i);
  y.array() -= y.mean();

  Eigen::MatrixXd gram = design.transpose() * design;
  const double trace = gram.trace();
  if (!(trace > 0.0)) {
    throw SingularDesignError("centered design is identically zero");
  }
  gram.diagonal().array() += 1e-10 * trace / static_cast<double>(p);

  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  Eigen::VectorXd gamma = ldlt.solve(design.transpose() * y);
  if (ldlt.info() != Eigen::Success || !gamma.allFinite()) {
    throw SingularDesignError("normal equations remain rank-deficient");
  }
  for (Eigen::Index k = 0; k < p; ++k) coef[allowed[k]] = gamma[k];
  return coef;
}

LassoResult lasso_row_gram(const Eigen::MatrixXd& gram,
                           const Eigen::VectorXd& corr, double lambda,
                           const LassoOptions& options) {
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  const Eigen::Index d = gram.rows();

  LassoResult result;
  result.coef = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd residual_corr = corr;  // corr - gram * coef

  // With +-1 actions the Gram diagonal is exactly 1, so each coordinate
  // update is a plain soft-threshold of the current residual correlation.
  for (result.sweeps = 1; result.sweeps <= options.max_sweeps; ++result.sweeps) {
    double max_change = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double old = result.coef[j];
      const double rho = residual_corr[j] + old;
      double updated = 0.0;
      if (rho > lambda) {
        updated = rho - lambda;
      } else if (rho < -lambda) {
        updated = rho + lambda;
      }
      const double change = updated - old;
      if (change != 0.0) {
        result.coef[j] = updated;
        residual_corr.noalias() -= gram.col(j) * change;
        max_change = std::max(max_change, std::abs(change));
      }
    }
    if (max_change < options.tolerance) {
      result.converged = true;
      return result;
    }
  }
  result.sweeps = options.max_sweeps;
  result.converged = false;
  return result;
}

LassoResult lasso_row(const BatchData& batch, int i, double lambda,
                      const LassoOptions& options) {
  const Eigen::Index n = batch.n();
  if (n < 1) throw std::invalid_argument("empty batch");
  const double inv_n = 1.0 / static_cast<double>(n);
  const Eigen::MatrixXd gram =
      batch.actions.transpose() * batch.actions * inv_n;
  const Eigen::VectorXd corr =
      batch.actions.transpose() * batch.rewards.col(i) * inv_n;
  return lasso_row_gram(gram, corr, lambda, options);
}

double lasso_objective(const BatchData& batch, int i, double lambda,
                       const Eigen::VectorXd& coef) {
  const double n = static_cast<double>(batch.n());
  const Eigen::VectorXd residual =
      batch.rewards.col(i) - batch.actions * coef;
  return residual.squaredNorm() / (2.0 * n) + lambda * coef.lpNorm<1>();
}

double lasso_kkt_residual(const BatchData& batch, int i, double lambda,
                          const Eigen::VectorXd& coef) {
  const double inv_n = 1.0 / static_cast<double>(batch.n());
  const Eigen::VectorXd residual =
      batch.rewards.col(i) - batch.actions * coef;
  const Eigen::VectorXd grad = batch.actions.transpose() * residual * inv_n;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < coef.size(); ++j) {
    double r;
    if (coef[j] != 0.0) {
      r = std::abs(grad[j] - lambda * (coef[j] > 0 ? 1.0 : -1.0));
    } else {
      r = std::max(0.0, std::abs(grad[j]) - lambda);
    }
    worst = std::max(worst, r);
  }
  return worst;
}

double restricted_eigenvalue_diagnostic(const Eigen::MatrixXd& actions, int s,
                                        int n_probes, std::uint64_t probe_seed) {
  const Eigen::Index n = actions.rows();
  const Eigen::Index d = actions.cols();
  if (n < 1 || d < 1) throw std::invalid_argument("empty design");
  const int sparsity = std::min<int>(s, static_cast<int>(d));

  const Eigen::MatrixXd gram =
      actions.transpose() * actions / static_cast<double>(n);

  Rng rng(probe_seed);
  auto random_support = [&](int size) {
    // Floyd's sampling over [0, d).
    std::vector<int> chosen;
    for (Eigen::Index k = d - size; k < d; ++k) {
      int candidate = static_cast<int>(rng.next_u64() % (k + 1));
      if (std::find(chosen.begin(), chosen.end(), candidate) != chosen.end()) {
        candidate = static_cast<int>(k);
      }
      chosen.push_back(candidate);
    }
    return chosen;
  };

  double best = std::numeric_limits<double>::infinity();

  // Sparse probes: random s-sparse unit vectors.
  for (int probe = 0; probe < n_probes / 2; ++probe) {
    const std::vector<int> support = random_support(sparsity);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(d);
    for (int idx : support) u[idx] = rng.normal();
    const double norm = u.norm();
    if (norm == 0.0) continue;
    u /= norm;
    best = std::min(best, u.dot(gram * u));
  }

  // Cone probes: dense tails with ||u[S^c]||_1 <= 3 ||u[S]||_1, scored
  // against ||u[S~]||^2 where S~ adds the s largest tail coordinates.
  for (int probe = 0; probe < n_probes - n_probes / 2; ++probe) {
    const std::vector<int> support = random_support(sparsity);
    std::vector<char> on_support(d, 0);
    for (int idx : support) on_support[idx] = 1;

    Eigen::VectorXd u = Eigen::VectorXd::Zero(d);
    double head_l1 = 0.0;
    for (int idx : support) {
      u[idx] = rng.normal();
      head_l1 += std::abs(u[idx]);
    }
    Eigen::VectorXd tail(d);
    double tail_l1 = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      tail[j] = on_support[j] ? 0.0 : rng.normal();
      tail_l1 += std::abs(tail[j]);
    }
    if (tail_l1 > 0.0) {
      const double budget = 3.0 * head_l1 * rng.uniform01();
      u += tail * (budget / tail_l1);
    }

    // S~ = S plus the s largest off-S coordinates by magnitude.
    std::vector<int> off;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (!on_support[j]) off.push_back(static_cast<int>(j));
    }
    const int extend = std::min<int>(sparsity, static_cast<int>(off.size()));
    std::partial_sort(off.begin(), off.begin() + extend, off.end(),
                      [&](int a, int b) { return std::abs(u[a]) > std::abs(u[b]); });
    double restricted_sq = 0.0;
    for (int idx : support) restricted_sq += u[idx] * u[idx];
    for (int k = 0; k < extend; ++k) restricted_sq += u[off[k]] * u[off[k]];
    if (restricted_sq <= 0.0) continue;
    best = std::min(best, u.dot(gram * u) / restricted_sq);
  }

  return best;
}

}  // namespace netband
