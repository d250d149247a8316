#include "netband/presets.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "netband/config.hpp"
#include "netband/rng.hpp"

namespace netband {

namespace {

// Practical constants from the simulated-data experiments: lasso penalty
// 0.035 with a 200-round exploration window, elimination constant 0.2 for
// the one-hot policy. The full-support policy uses the same practical
// threshold family, scaled for its sqrt(rho) elimination rule, with a short
// warm-up before the restricted regressions start.
constexpr double kLassoPenalty = 0.035;
constexpr long kExploration = 200;
constexpr double kNseCtau = 0.2;
constexpr double kNseFsCtau = 0.5;
constexpr int kNseFsWarmup = 5;

PolicyOverrides overrides_for(PolicyKind kind, long t1) {
  PolicyOverrides o;
  switch (kind) {
    case PolicyKind::kNetc:
      o.lambda = kLassoPenalty;
      o.t1 = t1;
      break;
    case PolicyKind::kNse:
      o.c_tau = kNseCtau;
      break;
    case PolicyKind::kNseFs:
      o.c_tau = kNseFsCtau;
      o.m0 = kNseFsWarmup;
      break;
    default:
      break;
  }
  return o;
}

const std::vector<PolicyKind> kAllFour = {
    PolicyKind::kBaseline, PolicyKind::kNetc, PolicyKind::kNse,
    PolicyKind::kNseFs};
const std::vector<PolicyKind> kProposedThree = {
    PolicyKind::kNetc, PolicyKind::kNse, PolicyKind::kNseFs};

ExperimentConfig base_cell(const std::string& id, PolicyKind kind, long T,
                           int runs, std::uint64_t seed, long t1) {
  ExperimentConfig config;
  config.id = id;
  config.policy = kind;
  config.overrides = overrides_for(kind, t1);
  config.T = T;
  config.n_runs = runs;
  config.base_seed = seed;
  config.out = id + ".csv";
  return config;
}

std::vector<ExperimentConfig> fig1() {
  std::vector<ExperimentConfig> cells;
  for (PolicyKind kind : kAllFour) {
    ExperimentConfig cell =
        base_cell("fig1-" + policy_kind_name(kind), kind, 20000, 200, 1,
                  kExploration);
    cell.instance = MixedSignalSpec{100, 0.1, 20.0, 0.001};
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<ExperimentConfig> fig2() {
  std::vector<ExperimentConfig> cells;
  for (int d : {100, 300, 500, 700, 900}) {
    for (PolicyKind kind : kProposedThree) {
      std::ostringstream id;
      id << "fig2-d" << d << "-" << policy_kind_name(kind);
      ExperimentConfig cell =
          base_cell(id.str(), kind, 20000, 100, 2, kExploration);
      cell.instance = MixedSignalSpec{d, 0.1, 20.0, 0.001};
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<ExperimentConfig> fig3() {
  std::vector<ExperimentConfig> cells;
  for (double beta : {0.01, 0.05, 0.1, 0.15, 0.2, 0.5}) {
    for (PolicyKind kind : kAllFour) {
      std::ostringstream id;
      id << "fig3-beta" << beta << "-" << policy_kind_name(kind);
      ExperimentConfig cell =
          base_cell(id.str(), kind, 20000, 100, 3, kExploration);
      cell.instance = MixedSignalSpec{100, beta, 20.0, 0.001};
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<ExperimentConfig> fig4() {
  std::vector<ExperimentConfig> cells;
  for (double s0 : {5.0, 10.0, 15.0, 20.0, 25.0, 50.0}) {
    for (PolicyKind kind : kAllFour) {
      std::ostringstream id;
      id << "fig4-s" << s0 << "-" << policy_kind_name(kind);
      ExperimentConfig cell =
          base_cell(id.str(), kind, 20000, 100, 4, kExploration);
      cell.instance = MixedSignalSpec{100, 0.1, s0, 0.001};
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<ExperimentConfig> village(const std::string& data_dir) {
  if (data_dir.empty()) {
    throw ValidationError(
        "preset 'village' needs a directory of adjacency files "
        "(--data-dir)");
  }
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry :
       std::filesystem::directory_iterator(data_dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) {
    throw ValidationError(data_dir + ": " + ec.message());
  }
  if (files.empty()) {
    throw ValidationError(data_dir + ": no adjacency files found");
  }
  std::sort(files.begin(), files.end());

  std::vector<ExperimentConfig> cells;
  for (std::size_t idx = 0; idx < files.size(); ++idx) {
    const std::string stem = files[idx].stem().string();
    for (PolicyKind kind : kAllFour) {
      std::ostringstream id;
      id << "village-" << stem << "-" << policy_kind_name(kind);
      ExperimentConfig cell = base_cell(id.str(), kind, 20000, 5,
                                        derive_seed(7, {idx}), 300);
      cell.instance = AdjacencySpec{files[idx].string(), 0.1, 0.001};
      // One fixed effect matrix per network; only noise and policy seeds
      // vary across the 5 runs.
      cell.fix_instance = true;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> presets = {
      {"fig1", "cumulative regret, all four policies (d=100, T=20000, 200 runs)",
       false},
      {"fig2", "per-individual regret vs d in {100..900} (100 runs)", false},
      {"fig3", "signal-strength sweep, beta in {0.01..0.5} (100 runs)", false},
      {"fig4", "sparsity sweep, s0 in {5..50} (100 runs)", false},
      {"village", "per-network semi-synthetic runs from an adjacency dir "
                  "(T=20000, 5 runs each)",
       true},
  };
  return presets;
}

bool is_preset(const std::string& name) {
  for (const PresetInfo& info : preset_list()) {
    if (info.name == name) return true;
  }
  return false;
}

std::vector<ExperimentConfig> expand_preset(const std::string& name,
                                            const std::string& data_dir) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "village") return village(data_dir);
  throw ValidationError("unknown preset '" + name + "'");
}

std::vector<ExperimentConfig> load_experiments(const std::string& name_or_path,
                                               const std::string& data_dir) {
  if (is_preset(name_or_path)) return expand_preset(name_or_path, data_dir);
  return parse_config(name_or_path);
}

}  // namespace netband
