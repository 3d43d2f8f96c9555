#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace densify {

// Continuity constants K_1..K_{N-1} of a piecewise power law with reference
// gain K_0: K_i = K_{i-1} * R_i^(alpha_i - alpha_{i-1}).
std::vector<double> continuity_gains(double reference_gain, std::span<const double> exponents,
                                     std::span<const double> breakpoints_m);

// Piecewise power-law gain P_r/P_t:
//   K_i d^-alpha_i   for R_i < d <= R_{i+1}   (R_0 = 0, R_N = inf)
// with exponents non-decreasing and K_i chosen so the gain is continuous.
class PathLossModel {
 public:
  static PathLossModel single_slope(double exponent, double reference_gain = 1.0);
  static PathLossModel dual_slope(double near_exponent, double far_exponent, double corner_m,
                                  double reference_gain = 1.0);
  PathLossModel(std::vector<double> exponents, std::vector<double> breakpoints_m,
                double reference_gain = 1.0);
  // Single slope, alpha = 4.
  PathLossModel() : PathLossModel({4.0}, {}, 1.0) {}

  const std::vector<double>& exponents() const noexcept { return exponents_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  double reference_gain() const noexcept { return segment_gains_.front(); }
  // K_0..K_{N-1}; element 0 is the reference gain.
  const std::vector<double>& segment_gains() const noexcept { return segment_gains_; }
  std::size_t segments() const noexcept { return exponents_.size(); }

  // First breakpoint: edge of the close-in region. Empty for a single slope.
  std::optional<double> corner_distance() const noexcept;
  double near_exponent() const noexcept { return exponents_.front(); }
  double far_exponent() const noexcept { return exponents_.back(); }

  // Index of the segment containing d (d == R_i belongs to segment i-1).
  std::size_t segment_index(double d) const noexcept;

  // Throws DomainError for d <= 0.
  double gain(double d) const;
  double gain_in_segment(std::size_t segment, double d) const noexcept;

  // Integral of gain(r)^power * r^(d-1) over (from, to]; `to` may be +inf when
  // the last segment converges. Used for the mean (power 1) and
  // variance (power 2) of Poisson shot noise.
  double radial_moment(double from, double to, int dim, double power) const;

  bool operator==(const PathLossModel&) const = default;

 private:
  std::vector<double> exponents_;
  std::vector<double> breakpoints_;
  std::vector<double> segment_gains_;
};

double path_gain(const PathLossModel& model, double d);

// Linear <-> dB, only used at I/O boundaries.
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

// Two-ray link geometry. All lengths in metres.
struct TwoRayConfig {
  double wavelength_m = 0.0;
  double transmit_height_m = 0.0;
  double receive_height_m = 0.0;
  double fluctuation_distance_m = 0.0;

  void validate() const;
};

inline constexpr double kSpeedOfLight = 3.0e8;  // m/s, engineering value
double wavelength_from_frequency(double frequency_hz);

// End of the small-scale interference bubble: 4 pi h_t L_a / lambda.
double small_scale_boundary(const TwoRayConfig& config);

// Classical two-ray breakpoint 4 h_t h_r / lambda, beyond which the link is in
// the ground Fresnel region.
double fresnel_breakpoint(const TwoRayConfig& config);

enum class PropagationRegion { SmallScaleInterference, LargeScaleInterference, GroundFresnel };

std::string_view to_string(PropagationRegion region) noexcept;

struct RegionClassification {
  PropagationRegion region;
  // Set when the small-scale boundary reaches past the Fresnel breakpoint; the
  // large-scale region is then empty and the split happens at the larger one.
  bool degenerate;
};

RegionClassification classify_propagation_region(double r, const TwoRayConfig& config);

struct TransmitterPreset {
  std::string_view name;
  double frequency_hz;
  double transmit_height_m;
};

// Reference deployments: macrocell, 802.11b/a access points, LTE microcell
// and a 60 GHz femtocell.
std::span<const TransmitterPreset> reference_transmitters() noexcept;

}  // namespace densify
