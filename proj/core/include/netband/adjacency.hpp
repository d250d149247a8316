#ifndef NETBAND_ADJACENCY_HPP
#define NETBAND_ADJACENCY_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace netband {

struct AdjacencyMatrix {
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> adj;
  int n() const { return static_cast<int>(adj.rows()); }
};

struct AdjacencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// File could not be opened or read.
struct IoFailure : AdjacencyError {
  using AdjacencyError::AdjacencyError;
};
/// Row lengths differ, or row count != column count.
struct NonSquare : AdjacencyError {
  using AdjacencyError::AdjacencyError;
};
/// An entry other than 0 or 1.
struct NonBooleanEntry : AdjacencyError {
  using AdjacencyError::AdjacencyError;
};

/// Loads an n x n 0/1 matrix, one row per line, entries separated by commas
/// and/or whitespace; blank lines are ignored. Errors carry the offending
/// row/column (1-based) in their message.
AdjacencyMatrix load_adjacency(const std::string& path);

struct AdjacencyStats {
  int d = 0;
  /// Max number of *other* nodes any single node connects to, divided by d.
  double fractional_sparsity = 0.0;
};

AdjacencyStats summary_stats(const AdjacencyMatrix& adj);

}  // namespace netband

#endif  // NETBAND_ADJACENCY_HPP
