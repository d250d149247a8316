#ifndef NETBAND_HARNESS_HPP
#define NETBAND_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "netband/environment.hpp"
#include "netband/generators.hpp"
#include "netband/policies.hpp"
#include "netband/types.hpp"

namespace netband {

struct MixedSignalSpec {
  int d = 100;
  double beta = 0.1;
  double s0 = 20.0;
  double weak_factor = 0.001;
};

struct CirculantSpec {
  int d = 100;
  int s = 20;
  double delta = 0.05;
};

struct AdjacencySpec {
  std::string path;
  double beta = 0.1;
  double weak_factor = 0.001;
};

using InstanceSpec = std::variant<MixedSignalSpec, CirculantSpec, AdjacencySpec>;

/// Builds the instance a spec describes, using the given stream seed.
InterferenceInstance build_instance(const InstanceSpec& spec,
                                    std::uint64_t seed);

/// Population size the spec will produce (loads the adjacency for overlay
/// specs).
int spec_dimension(const InstanceSpec& spec);

/// One sweep cell: instance x policy x horizon x replicates.
struct ExperimentConfig {
  std::string id;
  InstanceSpec instance;
  PolicyKind policy = PolicyKind::kOracle;
  PolicyOverrides overrides;
  long T = 1;
  int n_runs = 1;
  std::uint64_t base_seed = 0;
  double noise_std = 1.0;
  /// Reuse replicate 0's instance stream for every replicate (the
  /// semi-synthetic setting: one fixed effect matrix, varying noise and
  /// policy seeds).
  bool fix_instance = false;
  std::string out;  // CSV path; empty = no file
  int stride = 1;   // thin emitted per-round rows by this factor
  bool emit_replicates = false;
  int threads = 0;  // 0 = hardware concurrency
};

struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOutput {
  RegretTrace trace;
  std::optional<RoundRecords> records;
};

/// Drives one (environment, policy) pair for T rounds. Feedback is routed
/// per the policy's observation level. Errors from either side are rethrown
/// with the failing round attached.
RunOutput run_one(Environment& env, Policy& policy, long T,
                  bool record_rounds = false);

struct AggregateResult {
  std::string experiment_id;
  std::string policy_name;
  int d = 0;
  long T = 0;
  int n_runs = 0;
  std::vector<double> mean_cumulative;  // length T
  std::vector<double> std_cumulative;   // length T, population std
  std::vector<double> final_per_replicate;
  /// Per-replicate cumulative traces; kept only when the config asked for
  /// replicate emission.
  std::vector<std::vector<double>> replicate_cumulative;

  double mean_final() const {
    return mean_cumulative.empty() ? 0.0 : mean_cumulative.back();
  }
  double mean_final_per_individual() const {
    return d == 0 ? 0.0 : mean_final() / d;
  }
};

/// Runs all replicates of a cell (concurrently when threads allow) and
/// aggregates pointwise in replicate order. Replicate r derives its three
/// stream seeds as derive_seed(base_seed, {r, role}); the result is
/// independent of execution order.
AggregateResult run_many(const ExperimentConfig& config);

struct CellResult {
  ExperimentConfig config;
  std::optional<AggregateResult> result;  // empty on failure
  std::string error;                      // failure message
  bool ok() const { return result.has_value(); }
};

/// Runs each cell, isolating failures: a failed cell is recorded and the
/// sweep continues.
std::vector<CellResult> sweep(const std::vector<ExperimentConfig>& configs);

}  // namespace netband

#endif  // NETBAND_HARNESS_HPP
