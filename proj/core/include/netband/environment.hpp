#ifndef NETBAND_ENVIRONMENT_HPP
#define NETBAND_ENVIRONMENT_HPP

#include <cstdint>

#include "netband/instance.hpp"
#include "netband/rng.hpp"
#include "netband/types.hpp"

namespace netband {

/// Online sampling loop: step(a) returns X*a plus i.i.d. Gaussian noise per
/// coordinate and advances the noise stream. One Environment per replicate;
/// the noise stream is independent of any policy randomness.
class Environment {
 public:
  Environment(const InterferenceInstance& instance, double noise_std,
              std::uint64_t noise_seed)
      : instance_(&instance), noise_std_(noise_std), rng_(noise_seed) {}

  RewardVector step(const ActionVector& a);

  const InterferenceInstance& instance() const { return *instance_; }
  double noise_std() const { return noise_std_; }

 private:
  const InterferenceInstance* instance_;
  double noise_std_;
  Rng rng_;
};

/// Aggregated reward Z = 1'Y; the only feedback the baseline policy sees.
inline double aggregate(const RewardVector& y) { return y.sum(); }

}  // namespace netband

#endif  // NETBAND_ENVIRONMENT_HPP
