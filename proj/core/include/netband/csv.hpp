#ifndef NETBAND_CSV_HPP
#define NETBAND_CSV_HPP

#include <string>
#include <vector>

#include "netband/harness.hpp"

namespace netband {

/// Emitted trace schema, one row per (series, round):
///   experiment,policy,series,t,cum_regret,per_individual_regret
/// where series is "mean", "std", or a replicate index. Values are written
/// with shortest round-trip formatting, so emitted files are byte-stable
/// across runs and re-parse exactly.
struct CsvTraceRow {
  std::string experiment;
  std::string policy;
  std::string series;
  long t = 0;
  double cum_regret = 0.0;
  double per_individual_regret = 0.0;
};

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes header plus mean and std series, then one series per stored
/// replicate trace. Rounds are thinned by `stride`, always keeping t = T.
void emit_csv(const AggregateResult& result, const std::string& path,
              int stride = 1);

/// Reads back a file written by emit_csv.
std::vector<CsvTraceRow> read_trace_csv(const std::string& path);

/// Shortest round-trip decimal formatting used for every numeric field.
std::string format_double(double v);

}  // namespace netband

#endif  // NETBAND_CSV_HPP
