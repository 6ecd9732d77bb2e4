#pragma once

#include <string>

namespace cosetlab::runner {

// Library version string (git describe when available).
std::string version();

// Parses an experiment config, applies defaults, validates. Returns the
// canonical config JSON echoed into reports. Throws ParameterError on a
// malformed config and ResourceError when parameters exceed the caps.
std::string validate_config(const std::string& config_json);

struct ExperimentResult {
  std::string report_json;  // schema_version, version, config echo, results, pass
  bool pass = false;
};

// Runs one experiment. All randomness derives from config.seed through
// named substreams, so reports are byte-identical across re-runs; wall
// clock is deliberately left to the caller to keep them so.
ExperimentResult run_experiment(const std::string& config_json);

}  // namespace cosetlab::runner
