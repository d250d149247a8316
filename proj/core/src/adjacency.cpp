#include "netband/adjacency.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace netband {

namespace {

std::string loc(const std::string& path, std::size_t row, std::size_t col) {
  std::ostringstream os;
  os << path << ": row " << row;
  if (col > 0) os << ", column " << col;
  return os.str();
}

}  // namespace

AdjacencyMatrix load_adjacency(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure(path + ": cannot open file");

  std::vector<std::vector<bool>> rows;
  std::string line;
  while (std::getline(in, line)) {
    for (char& c : line) {
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<bool> row;
    std::string tok;
    while (fields >> tok) {
      if (tok == "0") {
        row.push_back(false);
      } else if (tok == "1") {
        row.push_back(true);
      } else {
        throw NonBooleanEntry(loc(path, rows.size() + 1, row.size() + 1) +
                              ": entry '" + tok + "' is not 0 or 1");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (in.bad()) throw IoFailure(path + ": read error");
  if (rows.empty()) throw NonSquare(path + ": empty matrix");

  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw NonSquare(loc(path, i + 1, 0) + ": has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }

  AdjacencyMatrix result;
  result.adj.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result.adj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return result;
}

AdjacencyStats summary_stats(const AdjacencyMatrix& adj) {
  AdjacencyStats stats;
  stats.d = adj.n();
  if (stats.d == 0) return stats;
  int max_degree = 0;
  for (int i = 0; i < stats.d; ++i) {
    int degree = 0;
    for (int j = 0; j < stats.d; ++j) {
      if (i != j && adj.adj(i, j)) ++degree;
    }
    max_degree = std::max(max_degree, degree);
  }
  stats.fractional_sparsity = static_cast<double>(max_degree) / stats.d;
  return stats;
}

}  // namespace netband
