#include "netband/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace netband {

std::string format_double(double v) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, result.ptr);
}

namespace {

void emit_series(std::ostream& out, const AggregateResult& result,
                 const std::string& series, const std::vector<double>& values,
                 int stride) {
  const long T = result.T;
  for (long t = 1; t <= T; ++t) {
    if ((t - 1) % stride != 0 && t != T) continue;
    const double cum = values[t - 1];
    out << result.experiment_id << ',' << result.policy_name << ',' << series
        << ',' << t << ',' << format_double(cum) << ','
        << format_double(cum / result.d) << '\n';
  }
}

}  // namespace

void emit_csv(const AggregateResult& result, const std::string& path,
              int stride) {
  if (stride < 1) stride = 1;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvError(path + ": cannot open for writing");
  out << "experiment,policy,series,t,cum_regret,per_individual_regret\n";
  if (result.T > 0 && !result.mean_cumulative.empty()) {
    emit_series(out, result, "mean", result.mean_cumulative, stride);
    emit_series(out, result, "std", result.std_cumulative, stride);
    for (std::size_t r = 0; r < result.replicate_cumulative.size(); ++r) {
      emit_series(out, result, std::to_string(r),
                  result.replicate_cumulative[r], stride);
    }
  }
  out.flush();
  if (!out) throw CsvError(path + ": write failure");
}

std::vector<CsvTraceRow> read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError(path + ": cannot open");
  std::vector<CsvTraceRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw CsvError(path + ": empty file");
  if (line != "experiment,policy,series,t,cum_regret,per_individual_regret") {
    throw CsvError(path + ": unexpected header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    CsvTraceRow row;
    std::string t_str, cum_str, per_str;
    if (!std::getline(fields, row.experiment, ',') ||
        !std::getline(fields, row.policy, ',') ||
        !std::getline(fields, row.series, ',') ||
        !std::getline(fields, t_str, ',') ||
        !std::getline(fields, cum_str, ',') ||
        !std::getline(fields, per_str)) {
      throw CsvError(path + ": malformed row: " + line);
    }
    row.t = std::stol(t_str);
    row.cum_regret = std::stod(cum_str);
    row.per_individual_regret = std::stod(per_str);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace netband
