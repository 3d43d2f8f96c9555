#pragma once

#include <string>

#include "densify/config.hpp"

namespace densify {

struct ExperimentOutput {
  std::string csv;
  std::string summary;  // one line
};

// Executes the configured experiment. The CSV starts with '#' metadata lines
// (tool version, experiment, seed, fingerprint, resolved config) followed by
// the header row; it depends only on resolved_config(config).
ExperimentOutput run_experiment(const RunConfig& config);

}  // namespace densify
