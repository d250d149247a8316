#ifndef NETBAND_POLICY_HPP
#define NETBAND_POLICY_HPP

#include <stdexcept>
#include <string>

#include "netband/types.hpp"

namespace netband {

/// What a policy is allowed to observe each round. The harness routes
/// feedback through exactly one of the observe calls based on this, so a
/// policy's information model is fixed at construction.
enum class ObservationLevel {
  kNone,       // plays open-loop (oracle)
  kAggregate,  // sees only Z_t = 1'Y_t
  kVector,     // sees the full reward vector Y_t
};

/// Uniform two-call interface: choose_action(t) then one observe per round,
/// for t = 1..T in order. A policy instance is a single-owner state machine;
/// it is never shared across replicates.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual const std::string& name() const = 0;
  virtual ObservationLevel observation_level() const = 0;

  virtual ActionVector choose_action(long t) = 0;

  virtual void observe_vector(long /*t*/, const RewardVector& /*y*/) {
    throw std::logic_error("policy does not accept vector feedback");
  }
  virtual void observe_aggregate(long /*t*/, double /*z*/) {
    throw std::logic_error("policy does not accept aggregate feedback");
  }
};

}  // namespace netband

#endif  // NETBAND_POLICY_HPP
