#ifndef NETBAND_POLICIES_HPP
#define NETBAND_POLICIES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "netband/estimators.hpp"
#include "netband/instance.hpp"
#include "netband/policy.hpp"
#include "netband/rng.hpp"
#include "netband/schedule.hpp"

namespace netband {

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

/// Plays the optimal fixed action sign(theta) every round. Regret reference.
class OraclePolicy : public Policy {
 public:
  explicit OraclePolicy(const InterferenceInstance& instance);

  const std::string& name() const override { return name_; }
  ObservationLevel observation_level() const override {
    return ObservationLevel::kNone;
  }
  ActionVector choose_action(long t) override;

 private:
  std::string name_ = "oracle";
  ActionVector astar_;
};

// ---------------------------------------------------------------------------
// Aggregated-reward UCB baseline
// ---------------------------------------------------------------------------

struct BaselineOptions {
  double lambda_reg = 1.0;
  double delta = 0.0;             // 0 -> 1/T
  double theta_norm_bound = 0.0;  // 0 -> d
  int restarts = 8;
  long maximizer_budget = 10000;
  /// Exhaustively enumerate the hypercube when 2^d <= this (and <= budget);
  /// otherwise run coordinate ascent from random restarts.
  long enumeration_cap = 4096;
};

/// Network-agnostic baseline: ridge regression on (a_t, Z_t) with a
/// self-normalized confidence radius, maximizing theta' a + beta_t *
/// sqrt(a' V^-1 a) over the hypercube each round. The maximizer is
/// approximate: best of sign(theta), coordinate ascent from random restarts
/// (exhaustive enumeration when the hypercube is small), within an
/// evaluation budget; on budget exhaustion it replays a uniformly random
/// previously-played action.
class AggregateUcbPolicy : public Policy {
 public:
  AggregateUcbPolicy(long T, int d, BaselineOptions options,
                     std::uint64_t seed);

  const std::string& name() const override { return name_; }
  ObservationLevel observation_level() const override {
    return ObservationLevel::kAggregate;
  }
  ActionVector choose_action(long t) override;
  void observe_aggregate(long t, double z) override;

  /// Current-round UCB objective for a candidate action.
  double ucb_value(const ActionVector& a) const;
  double confidence_radius() const;
  const Eigen::VectorXd& theta_estimate() const { return theta_hat_; }

 private:
  ActionVector maximize_ucb();

  std::string name_ = "baseline";
  long T_;
  int d_;
  BaselineOptions options_;
  Rng rng_;
  Eigen::MatrixXd v_inv_;
  Eigen::VectorXd b_;
  Eigen::VectorXd theta_hat_;
  double logdet_v_;
  Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic> history_;
  long rounds_played_ = 0;
  ActionVector last_action_;
};

// ---------------------------------------------------------------------------
// Explore-then-commit (NETC)
// ---------------------------------------------------------------------------

struct NetcOptions {
  std::optional<double> lambda;  // default: theorem formula with delta below
  std::optional<long> t1;        // default: ceil((s*T)^(2/3))
  double delta = 0.0;            // 0 -> 1/(d*T)
  LassoOptions lasso;
};

/// Explore with i.i.d. Rademacher actions for T1 rounds, fit a row-wise
/// lasso, commit to sign(theta_hat) for the rest of the horizon. Knows only
/// the row-sparsity level s.
class NetcPolicy : public Policy {
 public:
  NetcPolicy(long T, int d, int s, NetcOptions options, std::uint64_t seed);

  const std::string& name() const override { return name_; }
  ObservationLevel observation_level() const override {
    return ObservationLevel::kVector;
  }
  ActionVector choose_action(long t) override;
  void observe_vector(long t, const RewardVector& y) override;

  long exploration_length() const { return t1_; }
  /// True when T1 >= T: the run never leaves the exploration phase.
  bool degenerate_all_explore() const { return t1_ >= T_; }
  double lambda() const { return lambda_; }
  const Eigen::VectorXd& theta_estimate() const { return theta_hat_; }
  const ActionVector& committed_action() const { return committed_; }
  int nonconverged_rows() const { return nonconverged_rows_; }

 private:
  void fit();

  std::string name_ = "netc";
  long T_;
  int d_;
  long t1_;
  double lambda_;
  LassoOptions lasso_options_;
  Rng rng_;
  BatchData exploration_;
  Eigen::Index fill_ = 0;
  Eigen::VectorXd theta_hat_;
  ActionVector committed_;
  ActionVector last_action_;
  bool fitted_ = false;
  int nonconverged_rows_ = 0;
  long next_round_ = 1;
};

// ---------------------------------------------------------------------------
// Batched successive elimination (shared core of NSE and NSE-FS)
// ---------------------------------------------------------------------------

/// Doubling-batch successive elimination. Undetermined coordinates play
/// fresh Rademacher draws; committed coordinates play their committed sign
/// forever. Subclasses implement the per-batch estimator and elimination
/// rule. A coordinate with an empty column (rho_j = 0) has theta_j = 0
/// exactly, so it is committed to +1 at the end of the first batch.
class BatchedEliminationPolicy : public Policy {
 public:
  ObservationLevel observation_level() const override {
    return ObservationLevel::kVector;
  }
  ActionVector choose_action(long t) override;
  void observe_vector(long t, const RewardVector& y) override;

  const std::string& name() const override { return name_; }
  const BatchSchedule& schedule() const { return schedule_; }
  const Eigen::VectorXd& theta_estimate() const { return theta_hat_; }

  int undetermined_count() const {
    return static_cast<int>(undetermined_.size());
  }
  /// |U_m| after each processed batch; non-increasing by construction.
  const std::vector<int>& undetermined_history() const { return u_history_; }
  /// Round boundary T_m at which coordinate j was committed, or -1.
  long commit_round(int j) const { return commit_round_[j]; }
  /// Committed sign of coordinate j, or 0 while undetermined.
  double committed_sign(int j) const {
    return commit_round_[j] < 0 ? 0.0 : action_template_[j];
  }

 protected:
  BatchedEliminationPolicy(std::string name, long T, int d,
                           std::uint64_t seed);

  /// Update theta_hat_ for undetermined coordinates and eliminate. Called
  /// once per batch, after its last reward arrives.
  virtual void process_batch(int m, const BatchData& batch) = 0;

  void commit(int j, double sign_value, long round);

  std::string name_;
  long T_;
  int d_;
  BatchSchedule schedule_;
  Rng rng_;
  Eigen::VectorXd theta_hat_;
  ActionVector action_template_;
  std::vector<int> undetermined_;  // sorted
  std::vector<long> commit_round_;

 private:
  void start_batch(int m);

  int current_batch_ = 1;
  long next_round_ = 1;
  bool awaiting_reward_ = false;
  BatchData batch_;
  Eigen::Index fill_ = 0;
  std::vector<int> u_history_;
};

struct NseOptions {
  double delta = 0.0;                // 0 -> 1/(d*T); theorem threshold form
  double threshold_constant = 16.0;  // theorem form constant
  std::optional<double> c_tau;       // practical form: c*sqrt(2 log(2T)/T_m)
};

/// Successive elimination from column support sizes only (no support
/// locations): one-hot estimates, hard-thresholded column sums, and the
/// elimination test |theta_hat_j| > rho_j * tau_m.
class NsePolicy : public BatchedEliminationPolicy {
 public:
  NsePolicy(long T, ColumnProfile rho, NseOptions options, std::uint64_t seed);

  double tau(int m) const;
  const ColumnProfile& column_profile() const { return rho_; }

 protected:
  void process_batch(int m, const BatchData& batch) override;

 private:
  ColumnProfile rho_;
  NseOptions options_;
};

struct NseFsOptions {
  double delta = 0.0;               // 0 -> 1/(d*T); theorem threshold form
  double threshold_constant = 8.0;  // theorem form constant
  std::optional<double> c_tau;      // practical form: c*sqrt(2 log(2T)/T_m)
  std::optional<int> m0;            // warm-up batch count override
};

/// Successive elimination with full support knowledge. Warm-up batches
/// (m < m0) use one-hot estimates with support-restricted column sums and
/// the test |theta_hat_j| > rho_j * tau_m; later batches re-estimate each
/// row by least squares restricted to the support intersected with the
/// undetermined set and use the sharper test |theta_hat_j| > sqrt(rho_j) *
/// tau_m. A singular restricted design falls back to the warm-up estimator
/// for that row and is counted as a logged event.
class NseFsPolicy : public BatchedEliminationPolicy {
 public:
  NseFsPolicy(long T, SupportMask support, NseFsOptions options,
              std::uint64_t seed);

  double tau(int m) const;
  int warmup_batches() const { return m0_; }
  long singular_fallbacks() const { return singular_fallbacks_; }
  const ColumnProfile& column_profile() const { return rho_; }

 protected:
  void process_batch(int m, const BatchData& batch) override;

 private:
  SupportMask support_;
  ColumnProfile rho_;
  std::vector<std::vector<int>> support_rows_;  // S_i per row i
  std::vector<std::vector<int>> column_rows_;   // {i : j in S_i} per column j
  NseFsOptions options_;
  int m0_;
  long singular_fallbacks_ = 0;
};

// ---------------------------------------------------------------------------
// Factory
// ---------------------------------------------------------------------------

enum class PolicyKind { kOracle, kBaseline, kNetc, kNse, kNseFs };

const std::string& policy_kind_name(PolicyKind kind);
std::optional<PolicyKind> policy_kind_from_name(const std::string& name);

/// Flat override block exposed through experiment configs; fields apply only
/// to the policies that define them.
struct PolicyOverrides {
  std::optional<double> c_tau;
  std::optional<double> delta;
  std::optional<double> threshold_constant;
  std::optional<int> m0;
  std::optional<double> lambda;
  std::optional<long> t1;
  std::optional<long> maximizer_budget;
  std::optional<int> restarts;
};

/// Builds a policy with exactly the view of the instance its information
/// model allows: the baseline sees nothing of the instance, NETC sees the
/// row-sparsity level, NSE the column profile, NSE-FS the support mask, and
/// the oracle (a plumbing reference) the instance itself.
std::unique_ptr<Policy> make_policy(PolicyKind kind,
                                    const PolicyOverrides& overrides,
                                    const InterferenceInstance& instance,
                                    long T, std::uint64_t seed);

}  // namespace netband

#endif  // NETBAND_POLICIES_HPP
