#include <algorithm>
#include <cmath>

#include "netband/policies.hpp"

namespace netband {

// ---------------------------------------------------------------------------
// Shared batched successive-elimination core
// ---------------------------------------------------------------------------

BatchedEliminationPolicy::BatchedEliminationPolicy(std::string name, long T,
                                                   int d, std::uint64_t seed)
    : name_(std::move(name)),
      T_(T),
      d_(d),
      schedule_(make_schedule(T)),
      rng_(seed),
      theta_hat_(Eigen::VectorXd::Zero(d)),
      action_template_(ActionVector::Ones(d)),
      commit_round_(d, -1) {
  undetermined_.resize(d);
  for (int j = 0; j < d; ++j) undetermined_[j] = j;
}

void BatchedEliminationPolicy::start_batch(int m) {
  const Eigen::Index n = schedule_.batch_size(m);
  batch_.actions.resize(n, d_);
  batch_.rewards.resize(n, d_);
  fill_ = 0;
}

ActionVector BatchedEliminationPolicy::choose_action(long t) {
  if (t != next_round_ || awaiting_reward_) {
    throw std::logic_error("rounds must alternate choose/observe in order");
  }
  if (fill_ == 0) start_batch(current_batch_);

  ActionVector a = action_template_;
  for (int j : undetermined_) a[j] = rng_.rademacher();
  batch_.actions.row(fill_) = a.transpose();
  awaiting_reward_ = true;
  return a;
}

void BatchedEliminationPolicy::observe_vector(long t, const RewardVector& y) {
  if (t != next_round_ || !awaiting_reward_) {
    throw std::logic_error("rounds must alternate choose/observe in order");
  }
  batch_.rewards.row(fill_) = y.transpose();
  ++fill_;
  awaiting_reward_ = false;
  ++next_round_;

  if (t == schedule_.boundary(current_batch_)) {
    process_batch(current_batch_, batch_);
    u_history_.push_back(undetermined_count());
    ++current_batch_;
    fill_ = 0;
  }
}

void BatchedEliminationPolicy::commit(int j, double sign_value, long round) {
  action_template_[j] = sign_value;
  commit_round_[j] = round;
  undetermined_.erase(
      std::find(undetermined_.begin(), undetermined_.end(), j));
}

// ---------------------------------------------------------------------------
// NSE: column support sizes only
// ---------------------------------------------------------------------------

NsePolicy::NsePolicy(long T, ColumnProfile rho, NseOptions options,
                     std::uint64_t seed)
    : BatchedEliminationPolicy("nse", T, static_cast<int>(rho.size()), seed),
      rho_(std::move(rho)),
      options_(options) {
  if (options_.delta <= 0) {
    options_.delta = 1.0 / (static_cast<double>(d_) * T_);
  }
}

double NsePolicy::tau(int m) const {
  if (options_.c_tau) {
    return *options_.c_tau *
           std::sqrt(2.0 * std::log(2.0 * T_) / schedule_.boundary(m));
  }
  const double log_arg =
      std::log(4.0 * d_ * d_ * std::log2(static_cast<double>(T_)) /
               options_.delta);
  return options_.threshold_constant *
         std::sqrt(log_arg / std::pow(2.0, m - 1));
}

void NsePolicy::process_batch(int m, const BatchData& batch) {
  const double tau_m = tau(m);
  const std::vector<int> active = undetermined_;
  for (int j : active) {
    theta_hat_[j] = theta_hard_threshold(one_hot_estimate(batch, j), tau_m);
  }
  const long round = schedule_.boundary(m);
  for (int j : active) {
    if (rho_[j] == 0) {
      // Empty column: theta_j = 0 exactly, nothing to learn.
      commit(j, 1.0, round);
    } else if (std::abs(theta_hat_[j]) > rho_[j] * tau_m) {
      commit(j, sign_plus(theta_hat_[j]), round);
    }
  }
}

// ---------------------------------------------------------------------------
// NSE-FS: full support knowledge
// ---------------------------------------------------------------------------

namespace {

int default_warmup_batches(long T, int d, int s, double delta, int batches) {
  const double safe_s = std::max(1, s);
  const double inner = 8.0 * std::log2(static_cast<double>(T)) * d * safe_s / delta;
  const double target = 128.0 * safe_s * std::log(inner);
  int m0 = static_cast<int>(std::ceil(std::log2(std::max(2.0, target))));
  return std::clamp(m0, 1, batches);
}

}  // namespace

NseFsPolicy::NseFsPolicy(long T, SupportMask support, NseFsOptions options,
                         std::uint64_t seed)
    : BatchedEliminationPolicy("nse-fs", T, static_cast<int>(support.rows()),
                               seed),
      support_(std::move(support)),
      options_(options) {
  if (support_.rows() != support_.cols()) {
    throw std::invalid_argument("support mask must be square");
  }
  rho_.resize(d_);
  support_rows_.resize(d_);
  column_rows_.resize(d_);
  int s = 0;
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      if (support_(i, j)) {
        support_rows_[i].push_back(j);
        column_rows_[j].push_back(i);
      }
    }
    s = std::max(s, static_cast<int>(support_rows_[i].size()));
  }
  for (int j = 0; j < d_; ++j) {
    rho_[j] = static_cast<int>(column_rows_[j].size());
  }
  if (options_.delta <= 0) {
    options_.delta = 1.0 / (static_cast<double>(d_) * T_);
  }
  m0_ = options_.m0.value_or(default_warmup_batches(
      T_, d_, s, options_.delta, schedule_.batch_count()));
  m0_ = std::clamp(m0_, 1, schedule_.batch_count() + 1);
}

double NseFsPolicy::tau(int m) const {
  if (options_.c_tau) {
    return *options_.c_tau *
           std::sqrt(2.0 * std::log(2.0 * T_) / schedule_.boundary(m));
  }
  const double log_arg =
      std::log(16.0 * d_ * d_ * std::log2(static_cast<double>(T_)) /
               options_.delta);
  return options_.threshold_constant *
         std::sqrt(log_arg / std::pow(2.0, m));
}

void NseFsPolicy::process_batch(int m, const BatchData& batch) {
  const double tau_m = tau(m);
  const double n = static_cast<double>(batch.n());
  const std::vector<int> active = undetermined_;

  if (m < m0_) {
    // Warm-up: one-hot estimates, summed over the known support rows.
    for (int j : active) {
      double sum = 0.0;
      for (int i : column_rows_[j]) {
        sum += batch.rewards.col(i).dot(batch.actions.col(j)) / n;
      }
      theta_hat_[j] = sum;
    }
  } else {
    // Per-row least squares restricted to support hit by the undetermined
    // set; committed coordinates are constant within the batch, so the
    // centered regression absorbs them.
    std::vector<char> in_u(d_, 0);
    for (int j : active) in_u[j] = 1;
    Eigen::VectorXd theta_new = Eigen::VectorXd::Zero(d_);
    std::vector<int> allowed;
    for (int i = 0; i < d_; ++i) {
      allowed.clear();
      for (int j : support_rows_[i]) {
        if (in_u[j]) allowed.push_back(j);
      }
      if (allowed.empty()) continue;
      try {
        const Eigen::VectorXd coef = restricted_ols(batch, i, allowed);
        for (int j : allowed) theta_new[j] += coef[j];
      } catch (const SingularDesignError&) {
        ++singular_fallbacks_;
        for (int j : allowed) {
          theta_new[j] +=
              batch.rewards.col(i).dot(batch.actions.col(j)) / n;
        }
      }
    }
    for (int j : active) theta_hat_[j] = theta_new[j];
  }

  const long round = schedule_.boundary(m);
  for (int j : active) {
    if (rho_[j] == 0) {
      commit(j, 1.0, round);
      continue;
    }
    const double threshold = m < m0_
                                 ? rho_[j] * tau_m
                                 : std::sqrt(static_cast<double>(rho_[j])) * tau_m;
    if (std::abs(theta_hat_[j]) > threshold) {
      commit(j, sign_plus(theta_hat_[j]), round);
    }
  }
}

}  // namespace netband
