#include <doctest.h>

#include <cmath>
#include <vector>

#include "netband/environment.hpp"
#include "netband/generators.hpp"
#include "netband/harness.hpp"
#include "netband/policies.hpp"
#include "test_util.hpp"

using namespace netband;

namespace {

/// Runs policy against env, returning the played action per round.
std::vector<ActionVector> drive(Environment& env, Policy& policy, long T) {
  std::vector<ActionVector> actions;
  actions.reserve(T);
  for (long t = 1; t <= T; ++t) {
    ActionVector a = policy.choose_action(t);
    const RewardVector y = env.step(a);
    switch (policy.observation_level()) {
      case ObservationLevel::kNone:
        break;
      case ObservationLevel::kAggregate:
        policy.observe_aggregate(t, aggregate(y));
        break;
      case ObservationLevel::kVector:
        policy.observe_vector(t, y);
        break;
    }
    actions.push_back(std::move(a));
  }
  return actions;
}

}  // namespace

TEST_CASE("oracle policy plays the optimal action with zero regret") {
  Rng rng(21);
  const Eigen::MatrixXd effects = test_util::random_effects(4, rng);
  const InterferenceInstance instance(effects);
  OraclePolicy policy(instance);
  Environment env(instance, 1.0, 5);
  const RegretOracle oracle(instance);
  const auto actions = drive(env, policy, 32);
  for (const ActionVector& a : actions) {
    CHECK(oracle.regret(a) == 0.0);
  }
  // Matches the brute-force best fixed action.
  const auto [best, best_action] = test_util::hypercube_argmax(effects);
  CHECK(effects.colwise().sum().dot(actions[0]) ==
        doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("NSE commits correct signs on a noiseless circulant instance") {
  const InterferenceInstance instance = generate_circulant(8, 2, 0.5);
  // theta_j = 1 for every coordinate.
  NseOptions options;
  options.c_tau = 1.0;
  NsePolicy policy(126, column_profile(instance), options, 3);
  Environment env(instance, 0.0, 0);
  drive(env, policy, 126);
  CHECK(policy.undetermined_count() == 0);
  for (int j = 0; j < 8; ++j) {
    CHECK(policy.committed_sign(j) == 1.0);
  }
  // Undetermined set shrinks monotonically.
  const auto& history = policy.undetermined_history();
  for (std::size_t m = 1; m < history.size(); ++m) {
    CHECK(history[m] <= history[m - 1]);
  }
}

TEST_CASE("NSE-FS noiseless trajectory eliminates exactly in the OLS phase") {
  const InterferenceInstance instance = generate_circulant(8, 2, 0.5);
  NseFsOptions options;
  options.c_tau = 0.5;
  options.m0 = 3;  // restricted regressions from batch 3 (size 8) onward
  NseFsPolicy policy(126, instance.support(), options, 4);
  Environment env(instance, 0.0, 0);
  const RegretOracle oracle(instance);
  const auto actions = drive(env, policy, 126);

  CHECK(policy.undetermined_count() == 0);
  long last_commit = 0;
  for (int j = 0; j < 8; ++j) {
    CHECK(policy.committed_sign(j) == 1.0);
    CHECK(policy.commit_round(j) >= 0);
    last_commit = std::max(last_commit, policy.commit_round(j));
  }
  // In the noiseless OLS phase the restricted regression is exact, so
  // everything is committed once sqrt(rho_j) * tau_m drops below 1.
  CHECK(last_commit <= 30);
  for (std::size_t t = last_commit; t < actions.size(); ++t) {
    CHECK(oracle.regret(actions[t]) == 0.0);
  }
}

TEST_CASE("empty columns are committed to +1 after the first batch") {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(5, 5);
  x(0, 0) = 0.4;
  x(1, 1) = -0.2;
  x(3, 3) = 0.3;  // columns 2 and 4 stay empty
  const InterferenceInstance instance(x);

  SUBCASE("NSE") {
    NsePolicy policy(30, column_profile(instance), {}, 9);
    Environment env(instance, 1.0, 2);
    drive(env, policy, 30);
    CHECK(policy.commit_round(2) == 2);
    CHECK(policy.commit_round(4) == 2);
    CHECK(policy.committed_sign(2) == 1.0);
    CHECK(policy.committed_sign(4) == 1.0);
  }
  SUBCASE("NSE-FS") {
    NseFsPolicy policy(30, instance.support(), {}, 9);
    Environment env(instance, 1.0, 2);
    drive(env, policy, 30);
    CHECK(policy.commit_round(2) == 2);
    CHECK(policy.committed_sign(2) == 1.0);
  }
}

TEST_CASE("elimination policies are deterministic given seeds") {
  const InterferenceInstance instance = generate_circulant(6, 2, 0.4);
  NseOptions options;
  options.c_tau = 0.5;
  for (int run = 0; run < 2; ++run) {
    NsePolicy p1(62, column_profile(instance), options, 31);
    NsePolicy p2(62, column_profile(instance), options, 31);
    Environment e1(instance, 1.0, 8);
    Environment e2(instance, 1.0, 8);
    const auto a1 = drive(e1, p1, 62);
    const auto a2 = drive(e2, p2, 62);
    for (std::size_t t = 0; t < a1.size(); ++t) CHECK(a1[t] == a2[t]);
  }
}

TEST_CASE("commitment stability: committed coordinates never move again") {
  SignalModelParams params;
  params.d = 12;
  params.s0 = 4;
  params.seed = 6;
  const InterferenceInstance instance = generate_mixed_signal(params);
  NseFsOptions options;
  options.c_tau = 0.35;
  options.m0 = 3;
  NseFsPolicy policy(254, instance.support(), options, 10);
  Environment env(instance, 1.0, 3);
  const auto actions = drive(env, policy, 254);

  for (int j = 0; j < 12; ++j) {
    const long commit = policy.commit_round(j);
    if (commit < 0) continue;
    const double sign_value = policy.committed_sign(j);
    for (long t = commit; t < 254; ++t) {
      CHECK(actions[t][j] == sign_value);
    }
  }
  const auto& history = policy.undetermined_history();
  for (std::size_t m = 1; m < history.size(); ++m) {
    CHECK(history[m] <= history[m - 1]);
  }
}

TEST_CASE("NSE-FS warm-up fallback handles singular restricted designs") {
  const InterferenceInstance instance = generate_circulant(10, 4, 0.25);
  NseFsOptions options;
  options.m0 = 1;  // restricted regressions from the first (size-2) batch
  options.c_tau = 0.5;
  NseFsPolicy policy(62, instance.support(), options, 11);
  Environment env(instance, 1.0, 4);
  drive(env, policy, 62);
  CHECK(policy.singular_fallbacks() > 0);
}

TEST_CASE("NETC exploration length and lambda defaults") {
  NetcPolicy policy(20000, 100, 20, {}, 1);
  CHECK(policy.exploration_length() == 5429);
  CHECK_FALSE(policy.degenerate_all_explore());

  NetcOptions overridden;
  overridden.t1 = 200;
  overridden.lambda = 0.035;
  NetcPolicy practical(20000, 100, 20, overridden, 1);
  CHECK(practical.exploration_length() == 200);
  CHECK(practical.lambda() == doctest::Approx(0.035));
}

TEST_CASE("NETC noiseless recovery commits the oracle action") {
  const InterferenceInstance instance = generate_circulant(10, 2, 0.5);
  NetcOptions options;
  options.t1 = 16;  // > d would be ideal; 16 ~ d canvases the sparse rows
  options.lambda = 0.02;
  NetcPolicy policy(80, 10, 2, options, 17);
  Environment env(instance, 0.0, 0);
  const RegretOracle oracle(instance);
  const auto actions = drive(env, policy, 80);
  CHECK(policy.committed_action() == oracle.optimal_action());
  for (long t = 16; t < 80; ++t) {
    CHECK(oracle.regret(actions[t]) == 0.0);
  }
}

TEST_CASE("NETC flags degenerate all-explore runs") {
  NetcOptions options;
  options.t1 = 20;
  NetcPolicy policy(10, 4, 1, options, 3);
  CHECK(policy.degenerate_all_explore());
  const InterferenceInstance instance = generate_circulant(4, 1, 0.5);
  Environment env(instance, 1.0, 5);
  const auto actions = drive(env, policy, 10);  // never leaves exploration
  CHECK(actions.size() == 10);
}

TEST_CASE("baseline matches brute force on a 2-dimensional hypercube") {
  const InterferenceInstance instance = generate_circulant(2, 1, 0.4);
  AggregateUcbPolicy policy(40, 2, {}, 23);
  Environment env(instance, 1.0, 6);
  for (long t = 1; t <= 40; ++t) {
    const ActionVector chosen = policy.choose_action(t);
    double best = -1e300;
    for (int mask = 0; mask < 4; ++mask) {
      ActionVector a(2);
      a << (mask & 1 ? 1.0 : -1.0), (mask & 2 ? 1.0 : -1.0);
      best = std::max(best, policy.ucb_value(a));
    }
    CHECK(policy.ucb_value(chosen) == doctest::Approx(best).epsilon(1e-12));
    policy.observe_aggregate(t, aggregate(env.step(chosen)));
  }
}

TEST_CASE("baseline initial round output is a valid hypercube point") {
  AggregateUcbPolicy policy(10, 6, {}, 29);
  const ActionVector a = policy.choose_action(1);
  CHECK(is_valid_action(a));
  // With theta = 0 and isotropic V every action ties; any output is a valid
  // argmax.
  ActionVector flipped = a;
  flipped[3] = -flipped[3];
  CHECK(policy.ucb_value(a) == doctest::Approx(policy.ucb_value(flipped)));
}

TEST_CASE("baseline coordinate-ascent path is no worse than sign(theta)") {
  BaselineOptions options;
  options.enumeration_cap = 0;  // force the ascent path
  AggregateUcbPolicy policy(60, 8, options, 31);
  const InterferenceInstance instance = generate_circulant(8, 3, 0.2);
  Environment env(instance, 1.0, 7);
  for (long t = 1; t <= 60; ++t) {
    const ActionVector chosen = policy.choose_action(t);
    ActionVector greedy(8);
    for (int j = 0; j < 8; ++j) greedy[j] = sign_plus(policy.theta_estimate()[j]);
    CHECK(policy.ucb_value(chosen) >= policy.ucb_value(greedy) - 1e-12);
    policy.observe_aggregate(t, aggregate(env.step(chosen)));
  }
}

TEST_CASE("baseline budget exhaustion replays a previous action") {
  BaselineOptions options;
  options.enumeration_cap = 0;
  options.maximizer_budget = 1;
  AggregateUcbPolicy policy(20, 5, options, 37);
  const InterferenceInstance instance = generate_circulant(5, 2, 0.3);
  Environment env(instance, 1.0, 8);
  std::vector<ActionVector> seen;
  for (long t = 1; t <= 20; ++t) {
    const ActionVector chosen = policy.choose_action(t);
    if (t > 1) {
      bool replayed = false;
      for (const ActionVector& previous : seen) {
        if (previous == chosen) {
          replayed = true;
          break;
        }
      }
      CHECK(replayed);
    }
    seen.push_back(chosen);
    policy.observe_aggregate(t, aggregate(env.step(chosen)));
  }
}

TEST_CASE("baseline depends only on the aggregate feedback") {
  AggregateUcbPolicy p1(30, 4, {}, 41);
  AggregateUcbPolicy p2(30, 4, {}, 41);
  Rng rng(42);
  for (long t = 1; t <= 30; ++t) {
    const ActionVector a1 = p1.choose_action(t);
    const ActionVector a2 = p2.choose_action(t);
    CHECK(a1 == a2);
    RewardVector y(4);
    for (int i = 0; i < 4; ++i) y[i] = rng.normal();
    RewardVector shuffled(4);  // same sum, different coordinates
    shuffled << y[2], y[3], y[0], y[1];
    p1.observe_aggregate(t, aggregate(y));
    p2.observe_aggregate(t, aggregate(shuffled));
  }
}

TEST_CASE("policy factory wires each policy with its allowed view") {
  SignalModelParams params;
  params.d = 10;
  params.s0 = 3;
  params.seed = 12;
  const InterferenceInstance instance = generate_mixed_signal(params);
  PolicyOverrides overrides;

  const auto oracle = make_policy(PolicyKind::kOracle, overrides, instance, 10, 1);
  CHECK(oracle->observation_level() == ObservationLevel::kNone);
  CHECK(oracle->name() == "oracle");

  const auto baseline =
      make_policy(PolicyKind::kBaseline, overrides, instance, 10, 1);
  CHECK(baseline->observation_level() == ObservationLevel::kAggregate);
  CHECK_THROWS_AS(baseline->observe_vector(1, RewardVector::Zero(10)),
                  std::logic_error);

  const auto netc = make_policy(PolicyKind::kNetc, overrides, instance, 10, 1);
  CHECK(netc->observation_level() == ObservationLevel::kVector);
  CHECK_THROWS_AS(netc->observe_aggregate(1, 0.0), std::logic_error);

  const auto nse = make_policy(PolicyKind::kNse, overrides, instance, 10, 1);
  CHECK(nse->name() == "nse");
  const auto nse_fs =
      make_policy(PolicyKind::kNseFs, overrides, instance, 10, 1);
  CHECK(nse_fs->name() == "nse-fs");

  CHECK(policy_kind_from_name("nse-fs") == PolicyKind::kNseFs);
  CHECK(policy_kind_from_name("nse_fs") == PolicyKind::kNseFs);
  CHECK_FALSE(policy_kind_from_name("bogus").has_value());
}
