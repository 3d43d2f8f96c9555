#include "densify/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "densify/error.hpp"

namespace densify {

namespace {

void check_model_shape(double reference_gain, std::span<const double> exponents,
                       std::span<const double> breakpoints) {
  if (exponents.empty()) throw InvalidModel("path-loss model needs at least one exponent");
  if (breakpoints.size() + 1 != exponents.size())
    throw InvalidModel("path-loss model needs exactly one breakpoint fewer than exponents");
  if (!(reference_gain > 0.0) || !std::isfinite(reference_gain))
    throw InvalidModel("reference gain K_0 must be positive");
  for (double a : exponents)
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidModel("path-loss exponents must be positive");
  for (std::size_t i = 1; i < exponents.size(); ++i)
    if (exponents[i] < exponents[i - 1])
      throw InvalidModel("path-loss exponents must be non-decreasing with distance");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > 0.0) || !std::isfinite(breakpoints[i]))
      throw InvalidModel("breakpoints must be positive and finite");
    if (i > 0 && !(breakpoints[i] > breakpoints[i - 1]))
      throw InvalidModel("breakpoints must be strictly increasing");
  }
}

// Integral of r^(q-1) over [a, b], b possibly infinite.
double power_integral(double a, double b, double q) {
  if (std::isinf(b)) {
    if (q >= 0.0) return std::numeric_limits<double>::infinity();
    return -std::pow(a, q) / q;
  }
  const double log_ratio = std::log(b / a);
  const double x = q * log_ratio;
  if (x == 0.0) return log_ratio;
  // a^q (e^x - 1) / q, written to survive q -> 0.
  return std::pow(a, q) * log_ratio * (std::expm1(x) / x);
}

}  // namespace

std::vector<double> continuity_gains(double reference_gain, std::span<const double> exponents,
                                     std::span<const double> breakpoints_m) {
  check_model_shape(reference_gain, exponents, breakpoints_m);
  std::vector<double> gains;
  gains.reserve(breakpoints_m.size());
  double previous = reference_gain;
  for (std::size_t i = 0; i < breakpoints_m.size(); ++i) {
    previous *= std::pow(breakpoints_m[i], exponents[i + 1] - exponents[i]);
    gains.push_back(previous);
  }
  return gains;
}

PathLossModel PathLossModel::single_slope(double exponent, double reference_gain) {
  return PathLossModel({exponent}, {}, reference_gain);
}

PathLossModel PathLossModel::dual_slope(double near_exponent, double far_exponent,
                                        double corner_m, double reference_gain) {
  return PathLossModel({near_exponent, far_exponent}, {corner_m}, reference_gain);
}

PathLossModel::PathLossModel(std::vector<double> exponents, std::vector<double> breakpoints_m,
                             double reference_gain)
    : exponents_(std::move(exponents)), breakpoints_(std::move(breakpoints_m)) {
  const auto continuity = continuity_gains(reference_gain, exponents_, breakpoints_);
  segment_gains_.reserve(exponents_.size());
  segment_gains_.push_back(reference_gain);
  segment_gains_.insert(segment_gains_.end(), continuity.begin(), continuity.end());
}

std::optional<double> PathLossModel::corner_distance() const noexcept {
  if (breakpoints_.empty()) return std::nullopt;
  return breakpoints_.front();
}

std::size_t PathLossModel::segment_index(double d) const noexcept {
  // First breakpoint >= d; d == R_i stays on the near side.
  return static_cast<std::size_t>(
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), d) - breakpoints_.begin());
}

double PathLossModel::gain_in_segment(std::size_t segment, double d) const noexcept {
  return segment_gains_[segment] * std::pow(d, -exponents_[segment]);
}

double PathLossModel::gain(double d) const {
  if (!(d > 0.0)) throw DomainError("path gain needs a positive distance");
  return gain_in_segment(segment_index(d), d);
}

double PathLossModel::radial_moment(double from, double to, int dim, double power) const {
  if (!(from > 0.0)) throw DomainError("radial moment needs a positive lower limit");
  if (!(to > from)) return 0.0;
  double total = 0.0;
  double lo = from;
  for (std::size_t seg = segment_index(from); seg < exponents_.size() && lo < to; ++seg) {
    const double hi = seg < breakpoints_.size() ? std::min(to, breakpoints_[seg]) : to;
    if (hi > lo) {
      const double q = dim - power * exponents_[seg];
      total += std::pow(segment_gains_[seg], power) * power_integral(lo, hi, q);
    }
    lo = hi;
  }
  return total;
}

double path_gain(const PathLossModel& model, double d) { return model.gain(d); }

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

void TwoRayConfig::validate() const {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(wavelength_m) || !positive(transmit_height_m) || !positive(receive_height_m) ||
      !positive(fluctuation_distance_m))
    throw InvalidParameter("two-ray wavelength, heights and fluctuation distance must be positive");
}

double wavelength_from_frequency(double frequency_hz) {
  if (!(frequency_hz > 0.0)) throw InvalidParameter("frequency must be positive");
  return kSpeedOfLight / frequency_hz;
}

double small_scale_boundary(const TwoRayConfig& config) {
  config.validate();
  return 4.0 * std::numbers::pi * config.transmit_height_m * config.fluctuation_distance_m /
         config.wavelength_m;
}

double fresnel_breakpoint(const TwoRayConfig& config) {
  config.validate();
  return 4.0 * config.transmit_height_m * config.receive_height_m / config.wavelength_m;
}

std::string_view to_string(PropagationRegion region) noexcept {
  switch (region) {
    case PropagationRegion::SmallScaleInterference:
      return "small-scale-interference";
    case PropagationRegion::LargeScaleInterference:
      return "large-scale-interference";
    case PropagationRegion::GroundFresnel:
      return "ground-fresnel";
  }
  return "?";
}

RegionClassification classify_propagation_region(double r, const TwoRayConfig& config) {
  if (!(r > 0.0)) throw DomainError("separation distance must be positive");
  const double small = small_scale_boundary(config);
  const double fresnel = fresnel_breakpoint(config);
  if (small >= fresnel) {
    return {r < small ? PropagationRegion::SmallScaleInterference
                      : PropagationRegion::GroundFresnel,
            true};
  }
  if (r < small) return {PropagationRegion::SmallScaleInterference, false};
  if (r > fresnel) return {PropagationRegion::GroundFresnel, false};
  return {PropagationRegion::LargeScaleInterference, false};
}

std::span<const TransmitterPreset> reference_transmitters() noexcept {
  static constexpr TransmitterPreset presets[] = {
      {"Cellular Macrocell", 860e6, 60.0},
      {"802.11b Access Point", 2.4e9, 3.0},
      {"802.11a Access Point", 5.8e9, 3.0},
      {"LTE microcell", 700e6, 5.0},
      {"future mmWave femtocell", 60e9, 2.0},
  };
  return presets;
}

}  // namespace densify
