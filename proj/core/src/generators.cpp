#include "netband/generators.hpp"

#include <stdexcept>

#include "netband/rng.hpp"

namespace netband {

namespace {

void check_params(const SignalModelParams& params) {
  if (params.d <= 0) throw std::invalid_argument("d must be positive");
  if (params.beta < 0) throw std::invalid_argument("beta must be >= 0");
  if (params.s0 <= 0 || params.s0 > params.d) {
    throw std::invalid_argument("s0 must be in (0, d]");
  }
  if (params.weak_factor <= 0 || params.weak_factor > 1) {
    throw std::invalid_argument("weak_factor must be in (0, 1]");
  }
}

/// Mixed-signal magnitude for one in-support entry: beta*Z on a positive
/// coin flip, weak_factor*beta*Z on a negative one.
double signal_value(double beta, double weak_factor, double z, double r) {
  return (r > 0 ? beta : weak_factor * beta) * z;
}

}  // namespace

InterferenceInstance generate_mixed_signal(const SignalModelParams& params) {
  check_params(params);
  const int d = params.d;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
  const double keep_prob = params.s0 / static_cast<double>(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Rng entry(derive_seed(params.seed,
                            {static_cast<std::uint64_t>(i) * d + j}));
      const double z = entry.uniform(-1.0, 1.0);
      const double u = entry.uniform01();
      const double r = entry.rademacher();
      if (i != j && u > keep_prob) continue;
      x(i, j) = signal_value(params.beta, params.weak_factor, z, r);
    }
  }
  return InterferenceInstance(std::move(x));
}

InterferenceInstance generate_circulant(int d, int s, double delta) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  if (s < 1 || s > d) throw std::invalid_argument("s must be in [1, d]");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (((j - i) % d + d) % d < s) x(i, j) = delta;
    }
  }
  return InterferenceInstance(std::move(x));
}

InterferenceInstance overlay_signal(const AdjacencyMatrix& adj,
                                    const SignalModelParams& params) {
  const int d = adj.n();
  if (params.beta < 0) throw std::invalid_argument("beta must be >= 0");
  if (params.weak_factor <= 0 || params.weak_factor > 1) {
    throw std::invalid_argument("weak_factor must be in (0, 1]");
  }
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j && !adj.adj(i, j)) continue;
      Rng entry(derive_seed(params.seed,
                            {static_cast<std::uint64_t>(i) * d + j}));
      const double z = entry.uniform(-1.0, 1.0);
      const double r = entry.rademacher();
      x(i, j) = signal_value(params.beta, params.weak_factor, z, r);
    }
  }
  return InterferenceInstance(std::move(x));
}

}  // namespace netband
