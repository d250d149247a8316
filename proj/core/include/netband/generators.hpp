#ifndef NETBAND_GENERATORS_HPP
#define NETBAND_GENERATORS_HPP

#include <cstdint>

#include "netband/adjacency.hpp"
#include "netband/instance.hpp"

namespace netband {

/// Parameters of the mixed signal model. For each entry, with the diagonal
/// always in support and an off-diagonal entry in support with probability
/// s0/d, the value is beta*Z for a positive coin flip and
/// weak_factor*beta*Z for a negative one, Z ~ Unif(-1, 1).
struct SignalModelParams {
  int d = 100;
  double beta = 0.1;
  double s0 = 20.0;
  double weak_factor = 0.001;
  std::uint64_t seed = 0;
};

/// Random instance from the mixed signal model.
///
/// Each matrix entry (i, j) draws Z, U, R in that order from its own child
/// stream derive_seed(seed, {i*d + j}), so the result is independent of
/// generation order. Deterministic given params.
InterferenceInstance generate_mixed_signal(const SignalModelParams& params);

/// Circulant s-regular instance: entry (i, j) is in support iff
/// (j - i) mod d < s, and every in-support entry equals delta. Every column
/// profile entry equals s; with delta = 1/s every row L1 norm is exactly 1.
InterferenceInstance generate_circulant(int d, int s, double delta);

/// Semi-synthetic instance: support is the adjacency's edge set plus the
/// full diagonal, and in-support magnitudes follow the mixed signal model's
/// magnitude rule (beta*Z or weak_factor*beta*Z on a coin flip). params.s0
/// plays no role here; the support comes from the graph.
InterferenceInstance overlay_signal(const AdjacencyMatrix& adj,
                                    const SignalModelParams& params);

}  // namespace netband

#endif  // NETBAND_GENERATORS_HPP
