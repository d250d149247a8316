#ifndef NETBAND_INSTANCE_HPP
#define NETBAND_INSTANCE_HPP

#include <Eigen/Dense>

#include "netband/types.hpp"

namespace netband {

using SupportMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Number of individuals influenced by each individual: rho[j] counts the
/// nonzero entries of column j of the effect matrix.
using ColumnProfile = Eigen::VectorXi;

/// Column sums of the effect matrix; the aggregated effect of flipping each
/// coordinate. The optimal fixed action is sign(theta) coordinatewise.
using ThetaVector = Eigen::VectorXd;

/// Ground-truth problem instance: the d x d effect matrix, where entry
/// (i, j) is the effect of treating individual j on individual i's reward.
/// The support mask is stored separately so that support-aware algorithms
/// receive structure without magnitudes.
///
/// Immutable after construction; safe to share read-only across threads.
class InterferenceInstance {
 public:
  explicit InterferenceInstance(Eigen::MatrixXd effects);

  int d() const { return static_cast<int>(effects_.rows()); }
  const Eigen::MatrixXd& effects() const { return effects_; }
  const SupportMask& support() const { return support_; }

  /// True when every row satisfies sum_j |X[i][j]| <= 1. The mixed-signal
  /// generator can produce instances that violate this; they are still run,
  /// and the flag records the violation.
  bool assumption_compliant() const { return assumption_compliant_; }

 private:
  Eigen::MatrixXd effects_;
  SupportMask support_;
  bool assumption_compliant_;
};

ThetaVector theta_of(const InterferenceInstance& instance);

ColumnProfile column_profile(const InterferenceInstance& instance);

/// Maximum number of nonzero entries in any row.
int row_sparsity(const InterferenceInstance& instance);

/// Optimal fixed allocation: a[j] = sign(theta[j]) with sign(0) = +1.
ActionVector oracle_action(const ThetaVector& theta);

/// theta' (a* - a), always >= 0.
double instantaneous_regret(const InterferenceInstance& instance,
                            const ActionVector& a);

/// Precomputed oracle quantities for per-round regret in hot loops.
class RegretOracle {
 public:
  explicit RegretOracle(const InterferenceInstance& instance)
      : theta_(theta_of(instance)), astar_(oracle_action(theta_)) {}

  const ThetaVector& theta() const { return theta_; }
  const ActionVector& optimal_action() const { return astar_; }

  double regret(const ActionVector& a) const {
    double r = 0.0;
    for (Eigen::Index j = 0; j < theta_.size(); ++j) {
      r += theta_[j] * (astar_[j] - a[j]);
    }
    return r;
  }

 private:
  ThetaVector theta_;
  ActionVector astar_;
};

}  // namespace netband

#endif  // NETBAND_INSTANCE_HPP
