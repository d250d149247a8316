#ifndef NETBAND_CONFIG_HPP
#define NETBAND_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "netband/harness.hpp"

namespace netband {

/// File could not be read or is not well-formed key = value text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Well-formed text with an invalid, unknown, or missing key.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses an experiment config file into one ExperimentConfig per section.
///
/// Grammar (line oriented):
///   [cell-id]            starts a cell; the id must be unique
///   key = value          typed per key; unknown keys are rejected
///   # ...                comment; blank lines ignored
///
/// Keys: instance (mixed|circulant|adjacency), d, beta, s0, weak_factor,
/// s, delta (circulant entry value), adjacency (path), policy
/// (oracle|baseline|netc|nse|nse-fs), T, runs, base_seed, noise_std,
/// fix_instance, out, stride, emit_replicates, threads, and policy
/// overrides c_tau, conf_delta, threshold_constant, m0, lambda, T1,
/// maximizer_budget, restarts.
std::vector<ExperimentConfig> parse_config(const std::string& path);

/// parse_config for text already in memory (source names the origin in
/// error messages).
std::vector<ExperimentConfig> parse_config_text(const std::string& text,
                                                const std::string& source);

}  // namespace netband

#endif  // NETBAND_CONFIG_HPP
