#include "densify/channel.hpp"

#include <cmath>
#include <string>

#include "densify/error.hpp"

namespace densify {

FadingModel FadingModel::nakagami(double m) {
  FadingModel model{Kind::Nakagami, m};
  model.validate();
  return model;
}

void FadingModel::validate() const {
  if (kind == Kind::Nakagami && !(shape >= 0.5 && std::isfinite(shape)))
    throw InvalidParameter("Nakagami shape m must be >= 0.5");
}

double FadingModel::second_moment() const noexcept {
  switch (kind) {
    case Kind::None:
      return 1.0;
    case Kind::Rayleigh:
      return 2.0;
    case Kind::Nakagami:
      return 1.0 + 1.0 / shape;
  }
  return 1.0;
}

std::string_view to_string(FadingModel::Kind kind) noexcept {
  switch (kind) {
    case FadingModel::Kind::None:
      return "none";
    case FadingModel::Kind::Rayleigh:
      return "rayleigh";
    case FadingModel::Kind::Nakagami:
      return "nakagami";
  }
  return "?";
}

FadingSampler::FadingSampler(const FadingModel& model) : kind_(model.kind) {
  model.validate();
  // Gamma(m, 1/m): unit mean, variance 1/m.
  if (kind_ == FadingModel::Kind::Nakagami)
    gamma_ = std::gamma_distribution<double>(model.shape, 1.0 / model.shape);
}

double sample_fading_power(const FadingModel& model, Rng& rng) {
  FadingSampler sampler(model);
  return sampler(rng);
}

double resolve_noise(const NoiseSpec& spec, const PathLossModel& model, double transmit_power_w) {
  if (!(transmit_power_w > 0.0)) throw InvalidParameter("transmit power must be positive");
  if (const auto* absolute = std::get_if<AbsoluteNoise>(&spec)) {
    if (!(absolute->power_w >= 0.0)) throw InvalidParameter("noise power must be >= 0");
    return absolute->power_w;
  }
  const auto& snr = std::get<SnrAtCorner>(spec);
  const auto corner = model.corner_distance();
  if (!corner)
    throw MissingCornerDistance("SNR at the corner distance needs a model with a breakpoint");
  return transmit_power_w * model.gain(*corner) / db_to_linear(snr.snr_db);
}

}  // namespace densify
