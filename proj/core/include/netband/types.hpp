#ifndef NETBAND_TYPES_HPP
#define NETBAND_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace netband {

/// Treatment allocation for one round: length-d vector with entries in
/// {-1, +1}. Stored as doubles so it can enter matrix products directly.
using ActionVector = Eigen::VectorXd;

/// Reward vector observed after playing an action: one entry per individual.
using RewardVector = Eigen::VectorXd;

inline bool is_valid_action(const ActionVector& a) {
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (a[j] != 1.0 && a[j] != -1.0) return false;
  }
  return true;
}

/// sign with sign(0) := +1. This convention is used everywhere a sign is
/// committed (oracle action and all policies) so that runs are reproducible;
/// zero coordinates incur zero regret under either sign.
inline double sign_plus(double x) { return x < 0.0 ? -1.0 : 1.0; }

/// Per-round instantaneous regret and its running prefix sums.
struct RegretTrace {
  std::vector<double> per_round;
  std::vector<double> cumulative;

  void add(double r) {
    per_round.push_back(r);
    cumulative.push_back(cumulative.empty() ? r : cumulative.back() + r);
  }
  std::size_t size() const { return per_round.size(); }
  double final_cumulative() const {
    return cumulative.empty() ? 0.0 : cumulative.back();
  }
};

/// Full per-round record of a run: one row per round.
struct RoundRecords {
  Eigen::MatrixXd actions;  // T x d
  Eigen::MatrixXd rewards;  // T x d
};

}  // namespace netband

#endif  // NETBAND_TYPES_HPP
