#ifndef APSA_CONFIG_HPP
#define APSA_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "apsa/mc_harness.hpp"

namespace apsa {

// Flat key=value experiment description ('#' comments, blank lines ignored).
using KeyValueMap = std::map<std::string, std::string>;

// Defaults: the Table-style simulation grid at desk scale (100 runs).
KeyValueMap default_config();

// Named presets fig3..fig8 (the figure-style experiment cells).
KeyValueMap preset_config(const std::string& name);
std::vector<std::string> preset_names();

KeyValueMap parse_config_text(const std::string& text);
KeyValueMap load_config_file(const std::string& path);

// Applies "key=value" override strings on top of a base map; unknown keys
// are rejected when building the ExperimentConfig.
void apply_overrides(KeyValueMap& base,
                     const std::vector<std::string>& overrides);

// Fills unset keys from default_config(), validates everything and returns
// the fully-resolved map alongside the experiment. Throws
// std::invalid_argument naming the offending key.
ExperimentConfig build_experiment(const KeyValueMap& kv,
                                  KeyValueMap* resolved = nullptr);

bool operator==(const Penalty& a, const Penalty& b);
bool operator==(const FilterConfig& a, const FilterConfig& b);
bool operator==(const AlgorithmSpec& a, const AlgorithmSpec& b);
bool operator==(const StableParams& a, const StableParams& b);
bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

} // namespace apsa

#endif
