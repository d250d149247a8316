#include <cmath>
#include <limits>

#include "netband/policies.hpp"

namespace netband {

AggregateUcbPolicy::AggregateUcbPolicy(long T, int d, BaselineOptions options,
                                       std::uint64_t seed)
    : T_(T), d_(d), options_(options), rng_(seed) {
  if (T_ < 1) throw std::invalid_argument("horizon must be >= 1");
  if (options_.lambda_reg <= 0) {
    throw std::invalid_argument("lambda_reg must be > 0");
  }
  if (options_.delta <= 0) options_.delta = 1.0 / static_cast<double>(T_);
  if (options_.theta_norm_bound <= 0) {
    options_.theta_norm_bound = static_cast<double>(d_);
  }
  v_inv_ = Eigen::MatrixXd::Identity(d_, d_) / options_.lambda_reg;
  b_ = Eigen::VectorXd::Zero(d_);
  theta_hat_ = Eigen::VectorXd::Zero(d_);
  logdet_v_ = d_ * std::log(options_.lambda_reg);
  history_.resize(T_, d_);
}

double AggregateUcbPolicy::confidence_radius() const {
  // Self-normalized radius with noise scale sqrt(d): the aggregated noise
  // 1'eps is a sum of d independent 1-subgaussian terms.
  const double log_term = 0.5 * logdet_v_ -
                          0.5 * d_ * std::log(options_.lambda_reg) -
                          std::log(options_.delta);
  return std::sqrt(static_cast<double>(d_)) *
             std::sqrt(2.0 * std::max(0.0, log_term)) +
         std::sqrt(options_.lambda_reg) * options_.theta_norm_bound;
}

double AggregateUcbPolicy::ucb_value(const ActionVector& a) const {
  const double bonus_sq = std::max(0.0, a.dot(v_inv_ * a));
  return theta_hat_.dot(a) + confidence_radius() * std::sqrt(bonus_sq);
}

ActionVector AggregateUcbPolicy::maximize_ucb() {
  const double beta = confidence_radius();
  long evaluations = 0;

  // Objective evaluation via the cached product w = V^-1 a, so a single
  // coordinate flip costs O(1) to score and O(d) to accept.
  Eigen::VectorXd a(d_);
  Eigen::VectorXd w(d_);
  auto objective = [&](const Eigen::VectorXd& candidate) {
    ++evaluations;
    const double bonus_sq = std::max(0.0, candidate.dot(v_inv_ * candidate));
    return theta_hat_.dot(candidate) + beta * std::sqrt(bonus_sq);
  };

  double best_value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best;

  // Exhaustive search when the hypercube is small enough.
  if (d_ < 63 && (1L << d_) <= options_.enumeration_cap &&
      (1L << d_) <= options_.maximizer_budget) {
    for (long mask = 0; mask < (1L << d_); ++mask) {
      for (int j = 0; j < d_; ++j) a[j] = (mask >> j) & 1 ? 1.0 : -1.0;
      const double value = objective(a);
      if (value > best_value) {
        best_value = value;
        best = a;
      }
    }
    return best;
  }

  bool exhausted = false;
  for (int start = 0; start <= options_.restarts && !exhausted; ++start) {
    if (start == 0) {
      for (int j = 0; j < d_; ++j) a[j] = sign_plus(theta_hat_[j]);
    } else {
      for (int j = 0; j < d_; ++j) a[j] = rng_.rademacher();
    }
    w.noalias() = v_inv_ * a;
    double mean_term = theta_hat_.dot(a);
    double bonus_sq = std::max(0.0, a.dot(w));
    double value = mean_term + beta * std::sqrt(bonus_sq);
    ++evaluations;

    // Coordinate ascent: sweep until no single flip improves.
    bool improved = true;
    while (improved && !exhausted) {
      improved = false;
      for (int j = 0; j < d_ && !exhausted; ++j) {
        if (++evaluations > options_.maximizer_budget) {
          exhausted = true;
          break;
        }
        // Flipping a_j: a' = a - 2 a_j e_j.
        const double flip_mean = mean_term - 2.0 * a[j] * theta_hat_[j];
        const double flip_bonus_sq = std::max(
            0.0, bonus_sq - 4.0 * a[j] * w[j] + 4.0 * v_inv_(j, j));
        const double flip_value = flip_mean + beta * std::sqrt(flip_bonus_sq);
        if (flip_value > value) {
          w.noalias() -= 2.0 * a[j] * v_inv_.col(j);
          a[j] = -a[j];
          mean_term = flip_mean;
          bonus_sq = flip_bonus_sq;
          value = flip_value;
          improved = true;
        }
      }
    }
    if (value > best_value) {
      best_value = value;
      best = a;
    }
  }

  if (exhausted && rounds_played_ > 0) {
    // Budget ran out mid-ascent: replay a uniformly random past action.
    const long pick =
        static_cast<long>(rng_.next_u64() % static_cast<std::uint64_t>(rounds_played_));
    Eigen::VectorXd replay(d_);
    for (int j = 0; j < d_; ++j) replay[j] = history_(pick, j);
    return replay;
  }
  return best;
}

ActionVector AggregateUcbPolicy::choose_action(long /*t*/) {
  last_action_ = maximize_ucb();
  return last_action_;
}

void AggregateUcbPolicy::observe_aggregate(long /*t*/, double z) {
  const Eigen::VectorXd& a = last_action_;
  const Eigen::VectorXd w = v_inv_ * a;
  const double denom = 1.0 + a.dot(w);
  v_inv_.noalias() -= (w * w.transpose()) / denom;
  logdet_v_ += std::log(denom);
  b_.noalias() += a * z;
  theta_hat_.noalias() = v_inv_ * b_;
  if (rounds_played_ < T_) {
    for (int j = 0; j < d_; ++j) {
      history_(rounds_played_, j) = static_cast<std::int8_t>(a[j]);
    }
  }
  ++rounds_played_;
}

}  // namespace netband
