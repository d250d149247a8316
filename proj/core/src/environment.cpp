#include "netband/environment.hpp"

#include <stdexcept>

namespace netband {

RewardVector Environment::step(const ActionVector& a) {
  if (a.size() != instance_->d()) {
    throw std::invalid_argument("action dimension mismatch");
  }
  if (!is_valid_action(a)) {
    throw std::invalid_argument("action entries must be -1 or +1");
  }
  RewardVector y = instance_->effects() * a;
  if (noise_std_ > 0.0) {
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      y[i] += noise_std_ * rng_.normal();
    }
  }
  return y;
}

}  // namespace netband
