#include "netband/harness.hpp"

#include <cmath>
#include <sstream>
#include <thread>

#include "netband/rng.hpp"

namespace netband {

InterferenceInstance build_instance(const InstanceSpec& spec,
                                    std::uint64_t seed) {
  if (const auto* mixed = std::get_if<MixedSignalSpec>(&spec)) {
    SignalModelParams params;
    params.d = mixed->d;
    params.beta = mixed->beta;
    params.s0 = mixed->s0;
    params.weak_factor = mixed->weak_factor;
    params.seed = seed;
    return generate_mixed_signal(params);
  }
  if (const auto* circ = std::get_if<CirculantSpec>(&spec)) {
    return generate_circulant(circ->d, circ->s, circ->delta);
  }
  const auto& overlay = std::get<AdjacencySpec>(spec);
  SignalModelParams params;
  params.beta = overlay.beta;
  params.weak_factor = overlay.weak_factor;
  params.seed = seed;
  const AdjacencyMatrix adj = load_adjacency(overlay.path);
  params.d = adj.n();
  params.s0 = adj.n();  // unused by the overlay; kept in range
  return overlay_signal(adj, params);
}

int spec_dimension(const InstanceSpec& spec) {
  if (const auto* mixed = std::get_if<MixedSignalSpec>(&spec)) return mixed->d;
  if (const auto* circ = std::get_if<CirculantSpec>(&spec)) return circ->d;
  return load_adjacency(std::get<AdjacencySpec>(spec).path).n();
}

RunOutput run_one(Environment& env, Policy& policy, long T,
                  bool record_rounds) {
  RunOutput output;
  const RegretOracle oracle(env.instance());
  if (record_rounds) {
    output.records.emplace();
    output.records->actions.resize(T, env.instance().d());
    output.records->rewards.resize(T, env.instance().d());
  }
  for (long t = 1; t <= T; ++t) {
    try {
      const ActionVector a = policy.choose_action(t);
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
      output.trace.add(oracle.regret(a));
      if (record_rounds) {
        output.records->actions.row(t - 1) = a.transpose();
        output.records->rewards.row(t - 1) = y.transpose();
      }
    } catch (const std::exception& e) {
      throw RunError("round " + std::to_string(t) + ": " + e.what());
    }
  }
  return output;
}

namespace {

struct ReplicateSeeds {
  std::uint64_t instance;
  std::uint64_t noise;
  std::uint64_t policy;
};

ReplicateSeeds seeds_for(const ExperimentConfig& config, int replicate) {
  const std::uint64_t r = static_cast<std::uint64_t>(replicate);
  const std::uint64_t instance_rep = config.fix_instance ? 0 : r;
  return ReplicateSeeds{
      derive_seed(config.base_seed, {instance_rep, kSeedRoleInstance}),
      derive_seed(config.base_seed, {r, kSeedRoleNoise}),
      derive_seed(config.base_seed, {r, kSeedRolePolicy}),
  };
}

std::vector<double> run_replicate(const ExperimentConfig& config,
                                  int replicate) {
  const ReplicateSeeds seeds = seeds_for(config, replicate);
  const InterferenceInstance instance =
      build_instance(config.instance, seeds.instance);
  Environment env(instance, config.noise_std, seeds.noise);
  const std::unique_ptr<Policy> policy = make_policy(
      config.policy, config.overrides, instance, config.T, seeds.policy);
  try {
    RunOutput output = run_one(env, *policy, config.T);
    return std::move(output.trace.cumulative);
  } catch (const std::exception& e) {
    throw RunError("replicate " + std::to_string(replicate) + ": " + e.what());
  }
}

}  // namespace

AggregateResult run_many(const ExperimentConfig& config) {
  if (config.n_runs < 1) throw RunError("n_runs must be >= 1");
  if (config.T < 1) throw RunError("T must be >= 1");

  const int runs = config.n_runs;
  std::vector<std::vector<double>> traces(runs);
  std::vector<std::exception_ptr> errors(runs);

  unsigned hw = std::thread::hardware_concurrency();
  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(hw ? hw : 1);
  workers = std::min(workers, runs);

  if (workers <= 1) {
    for (int r = 0; r < runs; ++r) traces[r] = run_replicate(config, r);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int r = w; r < runs; r += workers) {
          try {
            traces[r] = run_replicate(config, r);
          } catch (...) {
            errors[r] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (int r = 0; r < runs; ++r) {
      if (errors[r]) std::rethrow_exception(errors[r]);
    }
  }

  // Deterministic reduction in replicate order, independent of which thread
  // produced each trace.
  AggregateResult result;
  result.experiment_id = config.id;
  result.policy_name = policy_kind_name(config.policy);
  result.T = config.T;
  result.n_runs = runs;
  result.d = spec_dimension(config.instance);
  result.mean_cumulative.assign(config.T, 0.0);
  result.std_cumulative.assign(config.T, 0.0);
  result.final_per_replicate.reserve(runs);
  for (int r = 0; r < runs; ++r) {
    for (long t = 0; t < config.T; ++t) {
      result.mean_cumulative[t] += traces[r][t];
    }
    result.final_per_replicate.push_back(traces[r].back());
  }
  for (long t = 0; t < config.T; ++t) result.mean_cumulative[t] /= runs;
  for (int r = 0; r < runs; ++r) {
    for (long t = 0; t < config.T; ++t) {
      const double dev = traces[r][t] - result.mean_cumulative[t];
      result.std_cumulative[t] += dev * dev;
    }
  }
  for (long t = 0; t < config.T; ++t) {
    result.std_cumulative[t] = std::sqrt(result.std_cumulative[t] / runs);
  }
  if (config.emit_replicates) result.replicate_cumulative = std::move(traces);
  return result;
}

std::vector<CellResult> sweep(const std::vector<ExperimentConfig>& configs) {
  std::vector<CellResult> results;
  results.reserve(configs.size());
  for (const ExperimentConfig& config : configs) {
    CellResult cell;
    cell.config = config;
    try {
      cell.result = run_many(config);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    results.push_back(std::move(cell));
  }
  return results;
}

}  // namespace netband
