#include "densify/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "densify/error.hpp"
#include "densify/random.hpp"

namespace densify {

DensityUnit density_unit_for(Dimension dim) noexcept {
  return dim == Dimension::Plane2D ? DensityUnit::PerKm2 : DensityUnit::PerKm3;
}

std::optional<double> SweepResult::coverage_peak_density(std::size_t t) const {
  if (rows.empty() || t >= thresholds().size()) return std::nullopt;
  const auto best = std::max_element(rows.begin(), rows.end(), [t](const auto& a, const auto& b) {
    return a.coverage[t].probability < b.coverage[t].probability;
  });
  return best->density;
}

std::vector<double> log_spaced_densities(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade < 1)
    throw InvalidParameter("log-spaced grid needs 0 < lo < hi and per_decade >= 1");
  const double decades = std::log10(hi / lo);
  const auto steps = static_cast<int>(std::ceil(decades * per_decade - 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i < steps; ++i) out.push_back(lo * std::pow(10.0, decades * i / steps));
  out.push_back(hi);
  return out;
}

SweepResult run_density_sweep(const NetworkScenario& scenario_template,
                              std::span<const double> densities, std::uint64_t trials,
                              std::uint64_t seed, const EngineOptions& options) {
  if (densities.empty()) throw InvalidParameter("density sweep needs at least one density");
  for (std::size_t i = 1; i < densities.size(); ++i)
    if (!(densities[i] > densities[i - 1]))
      throw InvalidParameter("sweep densities must be strictly increasing");
  if (scenario_template.thresholds.empty())
    throw InvalidParameter("density sweep needs at least one threshold");

  SweepResult sweep;
  sweep.scenario = scenario_template;
  sweep.seed = seed;
  sweep.trials = trials;
  sweep.rows.reserve(densities.size());
  for (std::size_t i = 0; i < densities.size(); ++i) {
    NetworkScenario scenario = scenario_template;
    scenario.density = densities[i];
    SweepRow row;
    row.density = densities[i];
    row.coverage = estimate_sir_ccdf(scenario, scenario.thresholds, trials,
                                     derive_seed(seed, {i}), options);
    for (std::size_t t = 0; t < scenario.thresholds.size(); ++t)
      row.throughput.push_back(
          potential_throughput(row.density, scenario.thresholds[t], row.coverage[t].probability));
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

double normalized_critical_density(BsDensity critical, double corner_m, Dimension dim) {
  if (critical.unit != density_unit_for(dim))
    throw InvalidParameter(dim == Dimension::Plane2D
                               ? "planar geometry needs a density per km^2"
                               : "volumetric geometry needs a density per km^3");
  if (!(critical.value > 0.0)) throw InvalidParameter("critical density must be positive");
  if (!(corner_m > 0.0)) throw InvalidParameter("corner distance must be positive");
  const double corner_km = corner_m / 1000.0;
  return unit_measure(dim) * std::pow(corner_km, spatial_dimension(dim)) * critical.value;
}

CriticalDensityResult find_critical_density(std::span<const double> densities,
                                            std::span<const double> throughput,
                                            std::optional<double> corner_m, Dimension dim) {
  if (densities.size() != throughput.size())
    throw InvalidParameter("density and throughput columns differ in length");
  if (densities.size() < 5) throw InsufficientData("critical density needs at least 5 rows");

  CriticalDensityResult result;
  const auto best = std::max_element(throughput.begin(), throughput.end());
  const auto i = static_cast<std::size_t>(best - throughput.begin());
  result.argmax_index = i;
  if (i == 0 || i + 1 == densities.size()) {
    result.window_first = result.window_last = i;
    return result;
  }

  // Parabola through the argmax and its neighbours, x = ln(density).
  const double x0 = std::log(densities[i - 1]), x1 = std::log(densities[i]),
               x2 = std::log(densities[i + 1]);
  const double y0 = throughput[i - 1], y1 = throughput[i], y2 = throughput[i + 1];
  const double slope01 = (y1 - y0) / (x1 - x0);
  const double slope12 = (y2 - y1) / (x2 - x1);
  const double a = (slope12 - slope01) / (x2 - x0);
  double vertex = x1;
  if (a < 0.0) vertex = std::clamp(0.5 * (x0 + x1) - slope01 / (2.0 * a), x0, x2);

  result.peak_found = true;
  result.window_first = i - 1;
  result.window_last = i + 1;
  result.curvature = 2.0 * a;
  result.critical_density = std::exp(vertex);
  if (corner_m)
    result.normalized_value = normalized_critical_density(
        {*result.critical_density, density_unit_for(dim)}, *corner_m, dim);
  return result;
}

CriticalDensityResult find_critical_density(const SweepResult& sweep, std::size_t t) {
  if (t >= sweep.thresholds().size()) throw InvalidParameter("threshold index out of range");
  std::vector<double> densities, throughput;
  for (const auto& row : sweep.rows) {
    densities.push_back(row.density);
    throughput.push_back(row.throughput[t]);
  }
  return find_critical_density(densities, throughput, sweep.scenario.pathloss.corner_distance(),
                               sweep.scenario.dimension);
}

ScalingFit fit_scaling_exponent(std::span<const double> densities,
                                std::span<const double> throughput) {
  if (densities.size() != throughput.size())
    throw InvalidParameter("density and throughput columns differ in length");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < densities.size(); ++i) {
    if (!(throughput[i] > 0.0) || !(densities[i] > 0.0)) continue;
    xs.push_back(std::log(densities[i]));
    ys.push_back(std::log(throughput[i]));
  }
  if (xs.size() < 4) throw InsufficientData("scaling fit needs at least 4 rows with throughput > 0");
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (*hi - *lo < 2.0 * std::numbers::ln10 - 1e-9)
    throw InsufficientData("scaling fit needs rows spanning at least two decades of density");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.points = xs.size();
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - fit.intercept - fit.exponent * xs[i];
    ssr += e * e;
  }
  fit.standard_error = std::sqrt(ssr / (n - 2.0) / sxx);
  return fit;
}

ScalingFit fit_scaling_exponent(const SweepResult& sweep, std::size_t t, double min_density) {
  if (t >= sweep.thresholds().size()) throw InvalidParameter("threshold index out of range");
  std::vector<double> densities, throughput;
  for (const auto& row : sweep.rows) {
    if (row.density < min_density) continue;
    densities.push_back(row.density);
    throughput.push_back(row.throughput[t]);
  }
  return fit_scaling_exponent(densities, throughput);
}

double close_in_cutoff_density(double corner_m, Dimension dim, double expected_count) {
  if (!(corner_m > 0.0)) throw InvalidParameter("corner distance must be positive");
  // expected_count = unit_measure * (R_c in km)^d * density
  return expected_count / normalized_critical_density({1.0, density_unit_for(dim)}, corner_m, dim);
}

}  // namespace densify
