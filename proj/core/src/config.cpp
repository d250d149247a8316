#include "netband/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace netband {

namespace {

struct RawCell {
  std::string id;
  int line = 0;
  // key -> (value, line)
  std::vector<std::pair<std::string, std::pair<std::string, int>>> entries;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_validation(const std::string& source, int line,
                                  const std::string& message) {
  std::ostringstream os;
  os << source << ":" << line << ": " << message;
  throw ValidationError(os.str());
}

class CellReader {
 public:
  CellReader(const RawCell& cell, const std::string& source)
      : cell_(cell), source_(source) {}

  bool has(const std::string& key) const { return find(key) != nullptr; }

  std::string get_string(const std::string& key) {
    const auto* entry = find(key);
    mark_used(key);
    return entry->first;
  }

  double get_double(const std::string& key) {
    const auto* entry = find(key);
    mark_used(key);
    try {
      std::size_t pos = 0;
      const double v = std::stod(entry->first, &pos);
      if (pos != entry->first.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail_validation(source_, entry->second,
                      "key '" + key + "': expected a number, got '" +
                          entry->first + "'");
    }
  }

  long get_long(const std::string& key) {
    const auto* entry = find(key);
    mark_used(key);
    try {
      std::size_t pos = 0;
      const long v = std::stol(entry->first, &pos);
      if (pos != entry->first.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail_validation(source_, entry->second,
                      "key '" + key + "': expected an integer, got '" +
                          entry->first + "'");
    }
  }

  bool get_bool(const std::string& key) {
    const auto* entry = find(key);
    mark_used(key);
    if (entry->first == "true" || entry->first == "1") return true;
    if (entry->first == "false" || entry->first == "0") return false;
    fail_validation(source_, entry->second,
                    "key '" + key + "': expected true/false");
  }

  int line_of(const std::string& key) const {
    const auto* entry = find(key);
    return entry ? entry->second : cell_.line;
  }

  void require(const std::string& key) const {
    if (!has(key)) {
      fail_validation(source_, cell_.line,
                      "cell '" + cell_.id + "': missing required key '" + key +
                          "'");
    }
  }

  void reject_unused() const {
    for (const auto& [key, value] : cell_.entries) {
      if (!used_.count(key)) {
        fail_validation(source_, value.second,
                        "unknown key '" + key + "' for this cell");
      }
    }
  }

 private:
  const std::pair<std::string, int>* find(const std::string& key) const {
    for (const auto& [k, v] : cell_.entries) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  void mark_used(const std::string& key) { used_.insert(key); }

  const RawCell& cell_;
  const std::string& source_;
  std::set<std::string> used_;
};

ExperimentConfig build_cell(const RawCell& raw, const std::string& source) {
  CellReader reader(raw, source);
  ExperimentConfig config;
  config.id = raw.id;

  reader.require("instance");
  reader.require("policy");
  reader.require("T");

  const std::string instance = reader.get_string("instance");
  if (instance == "mixed") {
    MixedSignalSpec spec;
    reader.require("d");
    spec.d = static_cast<int>(reader.get_long("d"));
    if (reader.has("beta")) spec.beta = reader.get_double("beta");
    if (reader.has("s0")) spec.s0 = reader.get_double("s0");
    if (reader.has("weak_factor")) {
      spec.weak_factor = reader.get_double("weak_factor");
    }
    config.instance = spec;
  } else if (instance == "circulant") {
    CirculantSpec spec;
    reader.require("d");
    reader.require("s");
    spec.d = static_cast<int>(reader.get_long("d"));
    spec.s = static_cast<int>(reader.get_long("s"));
    if (reader.has("delta")) spec.delta = reader.get_double("delta");
    config.instance = spec;
  } else if (instance == "adjacency") {
    AdjacencySpec spec;
    reader.require("adjacency");
    spec.path = reader.get_string("adjacency");
    if (reader.has("beta")) spec.beta = reader.get_double("beta");
    if (reader.has("weak_factor")) {
      spec.weak_factor = reader.get_double("weak_factor");
    }
    config.instance = spec;
  } else {
    fail_validation(source, reader.line_of("instance"),
                    "instance must be mixed, circulant, or adjacency");
  }

  const std::string policy = reader.get_string("policy");
  const auto kind = policy_kind_from_name(policy);
  if (!kind) {
    fail_validation(source, reader.line_of("policy"),
                    "unknown policy '" + policy + "'");
  }
  config.policy = *kind;

  config.T = reader.get_long("T");
  if (config.T < 1) {
    fail_validation(source, reader.line_of("T"), "T must be >= 1");
  }
  if (reader.has("runs")) {
    config.n_runs = static_cast<int>(reader.get_long("runs"));
    if (config.n_runs < 1) {
      fail_validation(source, reader.line_of("runs"), "runs must be >= 1");
    }
  }
  if (reader.has("base_seed")) {
    config.base_seed = static_cast<std::uint64_t>(reader.get_long("base_seed"));
  }
  if (reader.has("noise_std")) {
    config.noise_std = reader.get_double("noise_std");
    if (config.noise_std < 0) {
      fail_validation(source, reader.line_of("noise_std"),
                      "noise_std must be >= 0");
    }
  }
  if (reader.has("fix_instance")) {
    config.fix_instance = reader.get_bool("fix_instance");
  }
  if (reader.has("out")) config.out = reader.get_string("out");
  if (reader.has("stride")) {
    config.stride = static_cast<int>(reader.get_long("stride"));
    if (config.stride < 1) {
      fail_validation(source, reader.line_of("stride"), "stride must be >= 1");
    }
  }
  if (reader.has("emit_replicates")) {
    config.emit_replicates = reader.get_bool("emit_replicates");
  }
  if (reader.has("threads")) {
    config.threads = static_cast<int>(reader.get_long("threads"));
  }

  PolicyOverrides& overrides = config.overrides;
  if (reader.has("c_tau")) overrides.c_tau = reader.get_double("c_tau");
  if (reader.has("conf_delta")) {
    overrides.delta = reader.get_double("conf_delta");
  }
  if (reader.has("threshold_constant")) {
    overrides.threshold_constant = reader.get_double("threshold_constant");
  }
  if (reader.has("m0")) {
    overrides.m0 = static_cast<int>(reader.get_long("m0"));
  }
  if (reader.has("lambda")) overrides.lambda = reader.get_double("lambda");
  if (reader.has("T1")) overrides.t1 = reader.get_long("T1");
  if (reader.has("maximizer_budget")) {
    overrides.maximizer_budget = reader.get_long("maximizer_budget");
  }
  if (reader.has("restarts")) {
    overrides.restarts = static_cast<int>(reader.get_long("restarts"));
  }

  reader.reject_unused();
  return config;
}

}  // namespace

std::vector<ExperimentConfig> parse_config_text(const std::string& text,
                                                const std::string& source) {
  std::vector<RawCell> cells;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']') {
        throw ParseError(source + ":" + std::to_string(line_number) +
                         ": unterminated section header");
      }
      RawCell cell;
      cell.id = trim(stripped.substr(1, stripped.size() - 2));
      cell.line = line_number;
      if (cell.id.empty()) {
        throw ParseError(source + ":" + std::to_string(line_number) +
                         ": empty cell id");
      }
      cells.push_back(std::move(cell));
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(source + ":" + std::to_string(line_number) +
                       ": expected 'key = value'");
    }
    if (cells.empty()) {
      throw ParseError(source + ":" + std::to_string(line_number) +
                       ": key outside any [cell] section");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ParseError(source + ":" + std::to_string(line_number) +
                       ": empty key");
    }
    cells.back().entries.push_back({key, {value, line_number}});
  }

  std::set<std::string> seen_ids;
  std::vector<ExperimentConfig> configs;
  configs.reserve(cells.size());
  for (const RawCell& cell : cells) {
    if (!seen_ids.insert(cell.id).second) {
      fail_validation(source, cell.line, "duplicate cell id '" + cell.id + "'");
    }
    configs.push_back(build_cell(cell, source));
  }
  return configs;
}

std::vector<ExperimentConfig> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

}  // namespace netband
