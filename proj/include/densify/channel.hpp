#pragma once

#include <string_view>
#include <variant>

#include "densify/propagation.hpp"
#include "densify/random.hpp"

namespace densify {

// Unit-mean small-scale fading power gain, i.i.d. per link and per trial.
struct FadingModel {
  enum class Kind { None, Rayleigh, Nakagami };

  Kind kind = Kind::Rayleigh;
  double shape = 1.0;  // Nakagami m, >= 0.5; ignored otherwise

  static FadingModel none() { return {Kind::None, 1.0}; }
  static FadingModel rayleigh() { return {Kind::Rayleigh, 1.0}; }
  static FadingModel nakagami(double m);

  void validate() const;
  // E[h^2]: 1, 2 and 1 + 1/m.
  double second_moment() const noexcept;

  bool operator==(const FadingModel&) const = default;
};

std::string_view to_string(FadingModel::Kind kind) noexcept;

// Draws h for one link. Stateless apart from the stream.
class FadingSampler {
 public:
  explicit FadingSampler(const FadingModel& model);

  double operator()(Rng& rng) {
    switch (kind_) {
      case FadingModel::Kind::None:
        return 1.0;
      case FadingModel::Kind::Rayleigh:
        return exponential_(rng);
      case FadingModel::Kind::Nakagami:
        return gamma_(rng);
    }
    return 1.0;
  }

 private:
  FadingModel::Kind kind_;
  std::exponential_distribution<double> exponential_{1.0};
  std::gamma_distribution<double> gamma_;
};

double sample_fading_power(const FadingModel& model, Rng& rng);

struct AbsoluteNoise {
  double power_w = 0.0;
  bool operator==(const AbsoluteNoise&) const = default;
};

// Noise fixed so that a link at the corner distance R_c has this SNR.
struct SnrAtCorner {
  double snr_db = 20.0;
  bool operator==(const SnrAtCorner&) const = default;
};

using NoiseSpec = std::variant<AbsoluteNoise, SnrAtCorner>;

// sigma^2 = P_t * gain(R_c) / 10^(SNR/10). Throws MissingCornerDistance for a
// single-slope model under SnrAtCorner and InvalidParameter for negative power.
double resolve_noise(const NoiseSpec& spec, const PathLossModel& model, double transmit_power_w);

}  // namespace densify
