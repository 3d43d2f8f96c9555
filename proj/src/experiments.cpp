#include "densify/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "densify/analysis.hpp"
#include "densify/csv.hpp"
#include "densify/error.hpp"
#include "densify/sinr.hpp"

namespace densify {

namespace {

constexpr std::string_view kVersion = "densify 0.1.0";

CsvWriter start_csv(const RunConfig& config) {
  CsvWriter csv;
  csv.comment("tool", kVersion);
  csv.comment("experiment", to_string(config.experiment));
  csv.comment("seed", std::to_string(config.seed));
  csv.comment("fingerprint", format_hex(config_fingerprint(config)));
  csv.comment("config", resolved_config(config).dump());
  return csv;
}

std::string fmt(double v) { return format_double(v); }

std::string density_column(Dimension dim) {
  return "density_" + std::string(density_key_suffix(dim));
}

std::string throughput_column(Dimension dim) {
  return dim == Dimension::Plane2D ? "potential_throughput_bps_hz_km2"
                                   : "potential_throughput_bps_hz_km3";
}

SweepResult sweep_for(const RunConfig& config) {
  return run_density_sweep(config.scenario, config.densities, config.trials, config.seed,
                           config.engine);
}

void peak_comments(CsvWriter& csv, const SweepResult& sweep) {
  for (std::size_t t = 0; t < sweep.thresholds().size(); ++t)
    if (auto peak = sweep.coverage_peak_density(t))
      csv.comment("coverage_peak_density[threshold_db=" + fmt(linear_to_db(sweep.thresholds()[t])) +
                      "]",
                  fmt(*peak));
}

std::string peak_summary(const SweepResult& sweep) {
  std::ostringstream out;
  out << "coverage peak density";
  for (std::size_t t = 0; t < sweep.thresholds().size(); ++t)
    out << (t ? ", " : " ") << "T=" << linear_to_db(sweep.thresholds()[t]) << " dB: "
        << sweep.coverage_peak_density(t).value_or(0.0);
  return out.str();
}

ExperimentOutput run_sweep(const RunConfig& config, bool with_throughput) {
  const SweepResult sweep = sweep_for(config);
  const Dimension dim = config.scenario.dimension;
  CsvWriter csv = start_csv(config);
  peak_comments(csv, sweep);
  const std::string density_col = density_column(dim);
  const std::string throughput_col = throughput_column(dim);
  if (with_throughput)
    csv.header({density_col, "threshold_db", "coverage", "ci_halfwidth", "trials", throughput_col});
  else
    csv.header({density_col, "threshold_db", "coverage", "ci_halfwidth", "trials"});
  for (const auto& row : sweep.rows) {
    for (std::size_t t = 0; t < sweep.thresholds().size(); ++t) {
      std::vector<std::string> cells = {fmt(row.density), fmt(linear_to_db(sweep.thresholds()[t])),
                                        fmt(row.coverage[t].probability),
                                        fmt(row.coverage[t].ci_halfwidth),
                                        std::to_string(row.coverage[t].trials)};
      if (with_throughput) cells.push_back(fmt(row.throughput[t]));
      csv.row(cells);
    }
  }
  return {csv.str(), peak_summary(sweep)};
}

ExperimentOutput run_ccdf(const RunConfig& config) {
  const auto& thresholds = config.scenario.thresholds;
  const auto estimates =
      estimate_sir_ccdf(config.scenario, thresholds, config.trials, config.seed, config.engine);
  CsvWriter csv = start_csv(config);
  csv.header({"threshold_db", "threshold_linear", "ccdf", "ci_halfwidth", "trials"});
  for (std::size_t t = 0; t < thresholds.size(); ++t)
    csv.row({fmt(linear_to_db(thresholds[t])), fmt(thresholds[t]), fmt(estimates[t].probability),
             fmt(estimates[t].ci_halfwidth), std::to_string(estimates[t].trials)});
  std::ostringstream summary;
  summary << "P(SINR > " << linear_to_db(thresholds.front())
          << " dB) = " << estimates.front().probability;
  return {csv.str(), summary.str()};
}

ExperimentOutput run_grid(const RunConfig& config) {
  const auto& grid = config.grid;
  const double closed_form = grid_corner_sir(grid.alpha, grid.noise_term);
  const auto model = PathLossModel::single_slope(grid.alpha);
  double lo = INFINITY, hi = -INFINITY;
  std::string edges;
  Rng unused(config.seed);
  for (double r : grid.half_edges_m) {
    // User at the (R, R) corner of the centre cell, moved to the origin.
    const PointSet points = translated(make_square_grid(r), {-r, -r, 0.0});
    const double noise = grid.noise_term / std::pow(r, grid.alpha);
    const auto serving = associate(points, model).value();
    const double sir =
        compute_sinr(points, serving, model, FadingModel::none(), noise, 1.0, unused).sinr;
    lo = std::min(lo, sir);
    hi = std::max(hi, sir);
    if (!edges.empty()) edges += ';';
    edges += fmt(r);
  }
  const double spread = std::max(std::abs(hi - closed_form), std::abs(lo - closed_form)) / closed_form;
  const bool independent = (hi - lo) <= 1e-12 * closed_form;

  CsvWriter csv = start_csv(config);
  csv.header({"alpha", "noise_term", "sir", "sir_db", "half_edges_m", "grid_sir_min", "grid_sir_max",
              "max_relative_deviation", "r_independent"});
  csv.row({fmt(grid.alpha), fmt(grid.noise_term), fmt(closed_form), fmt(linear_to_db(closed_form)),
           edges, fmt(lo), fmt(hi), fmt(spread), independent ? "true" : "false"});
  std::ostringstream summary;
  summary << "corner SIR " << closed_form << " (" << linear_to_db(closed_form) << " dB), "
          << (independent ? "independent of R" : "R-dependent");
  return {csv.str(), summary.str()};
}

ExperimentOutput run_regions(const RunConfig& config) {
  CsvWriter csv = start_csv(config);
  csv.header({"transmitter_type", "frequency_hz", "wavelength_m", "transmit_height_m",
              "small_scale_distance_m", "receive_height_m", "fresnel_breakpoint_m", "degenerate"});
  for (const auto& preset : reference_transmitters()) {
    const TwoRayConfig two_ray{wavelength_from_frequency(preset.frequency_hz),
                               preset.transmit_height_m, config.regions.receive_height_m,
                               config.regions.fluctuation_distance_m};
    const double small = small_scale_boundary(two_ray);
    const double fresnel = fresnel_breakpoint(two_ray);
    csv.row({std::string(preset.name), fmt(preset.frequency_hz), fmt(two_ray.wavelength_m),
             fmt(preset.transmit_height_m), fmt(small), fmt(config.regions.receive_height_m),
             fmt(fresnel), small >= fresnel ? "true" : "false"});
  }
  return {csv.str(), "small-scale interference boundaries for " +
                         std::to_string(reference_transmitters().size()) + " transmitter types"};
}

ExperimentOutput run_critical(const RunConfig& config) {
  const SweepResult sweep = sweep_for(config);
  const Dimension dim = config.scenario.dimension;
  CsvWriter csv = start_csv(config);
  peak_comments(csv, sweep);
  const std::string suffix(density_key_suffix(dim));
  csv.header({"threshold_db", "peak_found", "critical_density_" + suffix,
              "normalized_critical_density", "argmax_density_" + suffix, "curvature"});
  std::ostringstream summary;
  summary << "critical density";
  for (std::size_t t = 0; t < sweep.thresholds().size(); ++t) {
    const auto result = find_critical_density(sweep, t);
    const double db = linear_to_db(sweep.thresholds()[t]);
    csv.row({fmt(db), result.peak_found ? "true" : "false",
             result.critical_density ? fmt(*result.critical_density) : "",
             result.normalized_value ? fmt(*result.normalized_value) : "",
             fmt(sweep.rows[result.argmax_index].density), fmt(result.curvature)});
    summary << (t ? ", " : " ") << "T=" << db << " dB: ";
    if (result.critical_density)
      summary << *result.critical_density << " (normalized "
              << result.normalized_value.value_or(0.0) << ")";
    else
      summary << "no interior peak";
  }
  return {csv.str(), summary.str()};
}

ExperimentOutput run_scaling(const RunConfig& config) {
  const SweepResult sweep = sweep_for(config);
  double cutoff = 0.0;
  if (config.scaling.tail_min_density)
    cutoff = *config.scaling.tail_min_density;
  else if (auto corner = config.scenario.pathloss.corner_distance())
    cutoff = close_in_cutoff_density(*corner, config.scenario.dimension);
  CsvWriter csv = start_csv(config);
  const std::string suffix(density_key_suffix(config.scenario.dimension));
  csv.header({"threshold_db", "tail_min_density_" + suffix, "exponent", "standard_error", "points"});
  std::ostringstream summary;
  summary << "throughput scaling exponent";
  for (std::size_t t = 0; t < sweep.thresholds().size(); ++t) {
    const auto fit = fit_scaling_exponent(sweep, t, cutoff);
    const double db = linear_to_db(sweep.thresholds()[t]);
    csv.row({fmt(db), fmt(cutoff), fmt(fit.exponent), fmt(fit.standard_error),
             std::to_string(fit.points)});
    summary << (t ? ", " : " ") << "T=" << db << " dB: " << fit.exponent << " +/- "
            << fit.standard_error;
  }
  return {csv.str(), summary.str()};
}

}  // namespace

ExperimentOutput run_experiment(const RunConfig& config) {
  switch (config.experiment) {
    case ExperimentKind::CoverageSweep:
      return run_sweep(config, false);
    case ExperimentKind::ThroughputSweep:
      return run_sweep(config, true);
    case ExperimentKind::Ccdf:
      return run_ccdf(config);
    case ExperimentKind::GridExample:
      return run_grid(config);
    case ExperimentKind::RegionsTable:
      return run_regions(config);
    case ExperimentKind::CriticalDensity:
      return run_critical(config);
    case ExperimentKind::ScalingExponent:
      return run_scaling(config);
  }
  throw Error("unhandled experiment kind");
}

}  // namespace densify
