#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "densify/montecarlo.hpp"

namespace densify {

enum class DensityUnit { PerKm2, PerKm3 };

DensityUnit density_unit_for(Dimension dim) noexcept;

// A BS density tagged with its unit, so that a planar density cannot be
// normalised against a volume (or vice versa).
struct BsDensity {
  double value = 0.0;
  DensityUnit unit = DensityUnit::PerKm2;
};

struct SweepRow {
  double density = 0.0;
  std::vector<CoverageEstimate> coverage;  // one per threshold
  std::vector<double> throughput;          // bps/Hz per km^2 or km^3
};

struct SweepResult {
  NetworkScenario scenario;  // template; its density field is unused
  std::vector<SweepRow> rows;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  const std::vector<double>& thresholds() const noexcept { return scenario.thresholds; }
  // Density at which coverage at threshold `t` peaks (the noise-limited knee).
  std::optional<double> coverage_peak_density(std::size_t t) const;
};

// Log-spaced grid, `per_decade` points per decade, both ends included.
std::vector<double> log_spaced_densities(double lo, double hi, int per_decade);

// Rows use sub-seeds (seed, row index) and are independent of one another.
SweepResult run_density_sweep(const NetworkScenario& scenario_template,
                              std::span<const double> densities, std::uint64_t trials,
                              std::uint64_t seed, const EngineOptions& options = {});

struct CriticalDensityResult {
  bool peak_found = false;
  std::optional<double> critical_density;  // BSs per km^2 or km^3
  std::optional<double> normalized_value;  // expected BSs inside the close-in ball
  std::size_t argmax_index = 0;
  std::size_t window_first = 0;  // rows used by the vertex fit
  std::size_t window_last = 0;
  double curvature = 0.0;  // d^2 PT / d(ln density)^2 of the local quadratic
};

// Interior maximum of potential throughput at threshold index `t`: discrete
// argmax refined by the vertex of the quadratic in log-density through the
// argmax and its neighbours. Requires at least 5 rows.
CriticalDensityResult find_critical_density(const SweepResult& sweep, std::size_t t);

// Same, on bare (density, throughput) columns. `corner_m` and `dim` are only
// used for the normalised value.
CriticalDensityResult find_critical_density(std::span<const double> densities,
                                            std::span<const double> throughput,
                                            std::optional<double> corner_m, Dimension dim);

// pi R_c^2 mu (2D) or 4pi/3 R_c^3 mu (3D, 3D+), with mu per km^d and R_c in m.
double normalized_critical_density(BsDensity critical, double corner_m, Dimension dim);

struct ScalingFit {
  double exponent = 0.0;
  double standard_error = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

// Least-squares slope of ln(PT) against ln(density) over rows with
// density >= min_density. Zero-throughput rows are skipped; fewer than four
// usable rows, or fewer than two decades between them, is InsufficientData.
ScalingFit fit_scaling_exponent(const SweepResult& sweep, std::size_t t, double min_density);
ScalingFit fit_scaling_exponent(std::span<const double> densities,
                                std::span<const double> throughput);

// Density above which the close-in ball holds `expected_count` BSs on average.
double close_in_cutoff_density(double corner_m, Dimension dim, double expected_count = 10.0);

}  // namespace densify
