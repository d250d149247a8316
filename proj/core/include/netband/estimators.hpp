#ifndef NETBAND_ESTIMATORS_HPP
#define NETBAND_ESTIMATORS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace netband {

/// Actions and rewards collected over one batch: one row per round.
struct BatchData {
  Eigen::MatrixXd actions;  // n x d, entries +-1
  Eigen::MatrixXd rewards;  // n x d

  Eigen::Index n() const { return actions.rows(); }
  Eigen::Index d() const { return actions.cols(); }
};

/// Batch-mean estimate of column j of the effect matrix:
/// Xhat[i] = (1/n) * sum_t rewards[t][i] * actions[t][j].
/// Unbiased under i.i.d. Rademacher actions.
Eigen::VectorXd one_hot_estimate(const BatchData& batch, int j);

/// Support-weighted column sum: sum of Xhat_col[i] over rows i whose support
/// contains j (support_col[i] true).
double theta_full_support(const Eigen::VectorXd& xhat_col,
                          const Eigen::Array<bool, Eigen::Dynamic, 1>& support_col);

/// Hard-thresholded column sum: sum of entries with |x| strictly greater
/// than tau/8. With tau = 0 this is the plain column sum.
double theta_hard_threshold(const Eigen::VectorXd& xhat_col, double tau);

struct SingularDesignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least squares for one row restricted to an allowed index set, with the
/// batch-centered design: minimizes
///   sum_t ( Y[t][i] - mean(Y_i) - gamma' (a_t - mean(a)) )^2
/// over gamma supported on `allowed`. Coefficients outside `allowed` are
/// exactly zero. The normal equations get a ridge of
/// 1e-10 * trace(At A) / |allowed| before solving; SingularDesignError is
/// thrown when the centered design cannot determine the coefficients even
/// with the ridge (fewer than |allowed|+1 rows, or an all-zero centered
/// design).
Eigen::VectorXd restricted_ols(const BatchData& batch, int i,
                               const std::vector<int>& allowed);

struct LassoOptions {
  double tolerance = 1e-8;  // max coordinate change per sweep
  int max_sweeps = 10000;
};

struct LassoResult {
  Eigen::VectorXd coef;
  bool converged = true;
  int sweeps = 0;
};

/// L1-penalized regression of row i's rewards on the actions:
///   argmin (1/2n) sum_t (Y[t][i] - gamma' a_t)^2 + lambda * ||gamma||_1,
/// solved by cyclic coordinate descent with soft-thresholding. The objective
/// divides by 2n exactly; lambda is never rescaled. If max_sweeps is reached
/// the best iterate is returned with converged = false.
LassoResult lasso_row(const BatchData& batch, int i, double lambda,
                      const LassoOptions& options = {});

/// Gram-form coordinate descent on (A'A/n, A'y/n). Requires unit Gram
/// diagonal (guaranteed for +-1 actions). Callers solving many rows against
/// one design should build the Gram once and use this.
LassoResult lasso_row_gram(const Eigen::MatrixXd& gram,
                           const Eigen::VectorXd& corr, double lambda,
                           const LassoOptions& options = {});

/// The lasso objective value, for solver cross-checks.
double lasso_objective(const BatchData& batch, int i, double lambda,
                       const Eigen::VectorXd& coef);

/// Max KKT residual of a candidate solution: for nonzero coordinates,
/// |g_j - lambda*sign(coef_j)|; for zero coordinates, max(0, |g_j| - lambda);
/// where g_j = (1/n) sum_t a[t][j] * (Y[t][i] - coef' a_t).
double lasso_kkt_residual(const BatchData& batch, int i, double lambda,
                          const Eigen::VectorXd& coef);

/// Sampled lower estimate of the restricted eigenvalue of A'A/n: minimizes
/// the quadratic form over random s-sparse unit vectors and over random
/// cone-constrained directions u with ||u[S^c]||_1 <= 3 ||u[S]||_1,
/// normalizing the latter by ||u[S~]||^2 with S~ = S plus the s largest
/// off-S coordinates. A probe, not an exact minimum; diagnostic only.
double restricted_eigenvalue_diagnostic(const Eigen::MatrixXd& actions, int s,
                                        int n_probes = 400,
                                        std::uint64_t probe_seed = 0x9e11);

}  // namespace netband

#endif  // NETBAND_ESTIMATORS_HPP
