#include <cmath>

#include "netband/policies.hpp"

namespace netband {

namespace {

long default_exploration_length(long T, int s) {
  return static_cast<long>(
      std::ceil(std::pow(static_cast<double>(s) * static_cast<double>(T),
                         2.0 / 3.0)));
}

}  // namespace

NetcPolicy::NetcPolicy(long T, int d, int s, NetcOptions options,
                       std::uint64_t seed)
    : T_(T), d_(d), lasso_options_(options.lasso), rng_(seed) {
  if (T_ < 1) throw std::invalid_argument("horizon must be >= 1");
  if (s < 1) throw std::invalid_argument("sparsity level must be >= 1");
  t1_ = options.t1.value_or(default_exploration_length(T_, s));
  if (t1_ < 1) throw std::invalid_argument("T1 must be >= 1");

  double delta = options.delta;
  if (delta <= 0) delta = 1.0 / (static_cast<double>(d_) * T_);
  lambda_ = options.lambda.value_or(
      4.0 * std::sqrt(2.0 * std::log(2.0 * d_ * d_ / delta) /
                      static_cast<double>(t1_)));

  const long buffered = std::min(t1_, T_);
  exploration_.actions.resize(buffered, d_);
  exploration_.rewards.resize(buffered, d_);
  theta_hat_ = Eigen::VectorXd::Zero(d_);
}

ActionVector NetcPolicy::choose_action(long t) {
  if (t != next_round_) throw std::logic_error("rounds must be sequential");
  if (t <= t1_) {
    ActionVector a(d_);
    for (int j = 0; j < d_; ++j) a[j] = rng_.rademacher();
    last_action_ = a;
    return a;
  }
  return committed_;
}

void NetcPolicy::observe_vector(long t, const RewardVector& y) {
  if (t != next_round_) throw std::logic_error("rounds must be sequential");
  ++next_round_;
  if (t > t1_) return;
  if (fill_ < exploration_.actions.rows()) {
    exploration_.actions.row(fill_) = last_action_.transpose();
    exploration_.rewards.row(fill_) = y.transpose();
    ++fill_;
  }
  // On a degenerate all-explore run (T1 >= T) the fit never happens.
  if (t == t1_ && t < T_) fit();
}

void NetcPolicy::fit() {
  BatchData data;
  data.actions = exploration_.actions.topRows(fill_);
  data.rewards = exploration_.rewards.topRows(fill_);
  const double inv_n = 1.0 / static_cast<double>(fill_);
  const Eigen::MatrixXd gram = data.actions.transpose() * data.actions * inv_n;
  const Eigen::MatrixXd corr =
      data.actions.transpose() * data.rewards * inv_n;  // column i for row i

  theta_hat_.setZero();
  for (int i = 0; i < d_; ++i) {
    LassoResult row = lasso_row_gram(gram, corr.col(i), lambda_, lasso_options_);
    if (!row.converged) ++nonconverged_rows_;
    theta_hat_ += row.coef;
  }
  committed_ = ActionVector(d_);
  for (int j = 0; j < d_; ++j) committed_[j] = sign_plus(theta_hat_[j]);
  fitted_ = true;
  exploration_ = BatchData{};  // buffers are no longer needed
}

}  // namespace netband
