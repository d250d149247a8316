#ifndef NETBAND_PRESETS_HPP
#define NETBAND_PRESETS_HPP

#include <string>
#include <vector>

#include "netband/harness.hpp"

namespace netband {

struct PresetInfo {
  std::string name;
  std::string description;
  bool needs_data_dir = false;
};

const std::vector<PresetInfo>& preset_list();
bool is_preset(const std::string& name);

/// Expands a named preset into its experiment cells. `data_dir` is required
/// by presets that ingest adjacency files (village) and ignored otherwise.
/// Throws ValidationError for unknown names or a missing data directory.
std::vector<ExperimentConfig> expand_preset(const std::string& name,
                                            const std::string& data_dir = "");

/// Loads experiments from a preset name or, failing that, a config file.
std::vector<ExperimentConfig> load_experiments(const std::string& name_or_path,
                                               const std::string& data_dir = "");

}  // namespace netband

#endif  // NETBAND_PRESETS_HPP
