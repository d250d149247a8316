#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "netband/adjacency.hpp"
#include "netband/config.hpp"
#include "netband/csv.hpp"
#include "netband/harness.hpp"
#include "netband/presets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

std::string output_path(const std::string& outdir,
                        const netband::ExperimentConfig& config) {
  if (config.out.empty()) return "";
  std::filesystem::path p(config.out);
  if (p.is_absolute() || outdir.empty()) return config.out;
  return (std::filesystem::path(outdir) / p).string();
}

int run_cells(const std::vector<netband::ExperimentConfig>& cells,
              const std::string& outdir, bool stop_on_failure) {
  if (!outdir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(outdir, ec);
  }
  bool any_failed = false;
  for (const netband::ExperimentConfig& config : cells) {
    const auto start = std::chrono::steady_clock::now();
    netband::CellResult cell;
    cell.config = config;
    try {
      cell.result = netband::run_many(config);
      const std::string path = output_path(outdir, config);
      if (!path.empty()) {
        netband::emit_csv(*cell.result, path, config.stride);
      }
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (cell.ok()) {
      std::printf("ok    %-28s policy=%-8s runs=%-4d final=%.4f (%.1fs)\n",
                  config.id.c_str(),
                  netband::policy_kind_name(config.policy).c_str(),
                  config.n_runs, cell.result->mean_final(), seconds);
    } else {
      any_failed = true;
      std::printf("FAIL  %-28s %s\n", config.id.c_str(), cell.error.c_str());
      if (stop_on_failure) return kExitRuntime;
    }
  }
  return any_failed ? kExitRuntime : kExitOk;
}

int do_stats(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) {
    std::cerr << dir << ": " << ec.message() << "\n";
    return kExitValidation;
  }
  std::sort(files.begin(), files.end());

  std::vector<double> sizes;
  std::vector<double> sparsities;
  for (const auto& file : files) {
    const netband::AdjacencyMatrix adj =
        netband::load_adjacency(file.string());
    const netband::AdjacencyStats stats = netband::summary_stats(adj);
    sizes.push_back(stats.d);
    sparsities.push_back(stats.fractional_sparsity);
  }
  if (sizes.empty()) {
    std::cerr << dir << ": no adjacency files found\n";
    return kExitValidation;
  }

  auto describe = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    const double stddev = v.size() > 1 ? std::sqrt(var / (n - 1)) : 0.0;
    const double median = v.size() % 2 == 1
                              ? v[v.size() / 2]
                              : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
    return std::array<double, 5>{mean, median, stddev, v.front(), v.back()};
  };

  const auto d_stats = describe(sizes);
  const auto s_stats = describe(sparsities);
  std::printf("networks: %zu\n", sizes.size());
  std::printf("%-16s %10s %10s %10s %10s %10s\n", "statistic", "mean",
              "median", "std", "min", "max");
  std::printf("%-16s %10.2f %10.2f %10.2f %10.2f %10.2f\n", "individuals (d)",
              d_stats[0], d_stats[1], d_stats[2], d_stats[3], d_stats[4]);
  std::printf("%-16s %10.2f %10.2f %10.2f %10.2f %10.2f\n", "sparsity (s/d)",
              s_stats[0], s_stats[1], s_stats[2], s_stats[3], s_stats[4]);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive targeting simulations under sparse network "
               "interference"};
  app.require_subcommand(1);

  std::string config_arg;
  std::string outdir = ".";
  std::string data_dir;
  std::string stats_dir;

  CLI::App* run = app.add_subcommand(
      "run", "Run the cells of a config file or preset; stop on failure");
  run->add_option("config", config_arg, "config file or preset name")
      ->required();
  run->add_option("--outdir", outdir, "directory for CSV output");
  run->add_option("--data-dir", data_dir,
                  "adjacency directory for presets that need one");

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Run all cells, isolating per-cell failures");
  sweep_cmd->add_option("config", config_arg, "config file or preset name")
      ->required();
  sweep_cmd->add_option("--outdir", outdir, "directory for CSV output");
  sweep_cmd->add_option("--data-dir", data_dir,
                        "adjacency directory for presets that need one");

  CLI::App* stats = app.add_subcommand(
      "stats", "Summary statistics of a directory of adjacency matrices");
  stats->add_option("dir", stats_dir, "directory of adjacency files")
      ->required();

  app.add_subcommand("presets", "List available experiment presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("presets")) {
      for (const netband::PresetInfo& info : netband::preset_list()) {
        std::printf("%-8s %s\n", info.name.c_str(), info.description.c_str());
      }
      return kExitOk;
    }
    if (app.got_subcommand("stats")) {
      return do_stats(stats_dir);
    }
    const std::vector<netband::ExperimentConfig> cells =
        netband::load_experiments(config_arg, data_dir);
    if (cells.empty()) {
      std::cerr << config_arg << ": no experiment cells\n";
      return kExitValidation;
    }
    return run_cells(cells, outdir, app.got_subcommand("run"));
  } catch (const netband::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const netband::ValidationError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitValidation;
  } catch (const netband::AdjacencyError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
