#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "densify/channel.hpp"
#include "densify/geometry.hpp"
#include "densify/propagation.hpp"

namespace densify {

// One downlink experiment. Modelling assumptions are fixed: every BS always
// transmits, all links share one path-loss law, no shadowing, no interference
// management, nearest-BS association.
struct NetworkScenario {
  Dimension dimension = Dimension::Plane2D;
  // Unset: chosen per density by default_window_radius().
  std::optional<double> window_radius_m;
  double density = 0.0;  // BSs per km^2 (2D) or km^3 (3D, 3D+)
  PathLossModel pathloss;
  FadingModel fading = FadingModel::rayleigh();
  NoiseSpec noise = AbsoluteNoise{0.0};
  double transmit_power_w = 1.0;
  std::vector<double> thresholds;  // linear SINR thresholds, ascending

  void validate() const;
  double density_per_m() const noexcept { return density * per_km_to_per_m(dimension); }
  DeploymentGeometry resolved_geometry() const;
  double noise_power_w() const { return resolve_noise(noise, pathloss, transmit_power_w); }
};

struct EngineOptions {
  // 0: DENSIFY_THREADS if set, otherwise hardware concurrency.
  unsigned threads = 0;
  // Interferers are drawn exactly in order of distance until the standard
  // deviation of the remaining shot noise is at most this fraction of the
  // interference-plus-noise seen so far; the remainder is then drawn from a
  // Gamma law with its conditional mean and variance. 0 draws every point
  // inside the window.
  double far_field_tolerance = 0.05;
  std::size_t min_exact_points = 16;

  unsigned resolved_threads() const;
};

struct CoverageEstimate {
  double probability = 0.0;
  double ci_halfwidth = 0.0;  // 95%
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  std::uint64_t covered = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool exact_interval = false;  // Clopper-Pearson instead of the normal interval
};

// 95% interval for `covered` successes out of `trials`: normal approximation,
// replaced by Clopper-Pearson when fewer than 10 successes or failures.
CoverageEstimate make_coverage_estimate(std::uint64_t covered, std::uint64_t trials,
                                        std::uint64_t seed);

// SINR of `trials` independent realizations; trial k uses stream (seed, k).
std::vector<double> sample_sinr(const NetworkScenario& scenario, std::uint64_t trials,
                                std::uint64_t seed, const EngineOptions& options = {});

// P(SINR > threshold) over fresh networks and fresh fading per trial.
// Deterministic in (scenario, threshold, trials, seed) for any thread count.
CoverageEstimate estimate_coverage(const NetworkScenario& scenario, double threshold,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const EngineOptions& options = {});

// CCDF at ascending thresholds, all read off the same realizations.
std::vector<CoverageEstimate> estimate_sir_ccdf(const NetworkScenario& scenario,
                                                std::span<const double> thresholds,
                                                std::uint64_t trials, std::uint64_t seed,
                                                const EngineOptions& options = {});

// density * log2(1 + T) * coverage, in bps/Hz per unit of `density`.
double potential_throughput(double density, double threshold, double coverage);

}  // namespace densify
