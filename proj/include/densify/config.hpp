#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "densify/montecarlo.hpp"

namespace densify {

enum class ExperimentKind {
  CoverageSweep,
  ThroughputSweep,
  Ccdf,
  GridExample,
  RegionsTable,
  CriticalDensity,
  ScalingExponent,
};

std::string_view to_string(ExperimentKind kind) noexcept;
std::optional<ExperimentKind> parse_experiment_kind(std::string_view text) noexcept;
bool needs_density_grid(ExperimentKind kind) noexcept;

struct GridExampleConfig {
  double alpha = 4.0;
  std::vector<double> half_edges_m{50.0, 100.0, 200.0};
  double noise_term = 0.0;  // sigma^2 R^alpha / (P_t K_0)
};

struct RegionsConfig {
  double fluctuation_distance_m = 0.2;
  double receive_height_m = 1.5;
};

struct ScalingConfig {
  // Unset: densities with at least 10 expected BSs in the close-in ball
  // (all densities for a single slope).
  std::optional<double> tail_min_density;
};

struct RunConfig {
  ExperimentKind experiment = ExperimentKind::CoverageSweep;
  NetworkScenario scenario;
  std::vector<double> densities;  // per km^2 or km^3, ascending
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  EngineOptions engine;
  GridExampleConfig grid;
  RegionsConfig regions;
  ScalingConfig scaling;
  std::optional<std::string> output;  // not part of the resolved record
};

// Strict parse of the JSON configuration: unknown keys and invariant
// violations raise ConfigError naming the field path. When `kind` is given it
// must agree with the file's "experiment" key, if present.
RunConfig parse_config(std::string_view text, std::optional<ExperimentKind> kind = std::nullopt);
RunConfig default_config(ExperimentKind kind);

// Every resolved setting that affects results (thread count and output path
// excluded). Parsing this document yields an equivalent RunConfig.
nlohmann::json resolved_config(const RunConfig& config);

// FNV-1a over the compact dump of resolved_config().
std::uint64_t config_fingerprint(const RunConfig& config);

std::string_view density_key_suffix(Dimension dim) noexcept;  // "per_km2" / "per_km3"

}  // namespace densify
