#include "netband/policies.hpp"

namespace netband {

OraclePolicy::OraclePolicy(const InterferenceInstance& instance)
    : astar_(oracle_action(theta_of(instance))) {}

ActionVector OraclePolicy::choose_action(long /*t*/) { return astar_; }

}  // namespace netband
