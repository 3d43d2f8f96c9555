#include "densify/sinr.hpp"

#include <cmath>
#include <limits>

#include "densify/error.hpp"

namespace densify {

std::optional<std::size_t> associate(const PointSet& points, const PathLossModel& /*model*/) {
  if (points.empty()) return std::nullopt;
  std::size_t best = 0;
  double best_distance = points.points[0].norm_squared();
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double d2 = points.points[i].norm_squared();
    if (d2 < best_distance) {
      best_distance = d2;
      best = i;
    }
  }
  return best;
}

SinrSample compute_sinr(const PointSet& points, std::size_t serving_index,
                        const PathLossModel& model, const FadingModel& fading, double noise_w,
                        double transmit_power_w, Rng& rng) {
  if (serving_index >= points.size()) throw InvalidParameter("serving index out of range");
  if (!(noise_w >= 0.0)) throw InvalidParameter("noise power must be >= 0");
  FadingSampler draw(fading);
  SinrSample sample;
  sample.serving_index = serving_index;
  sample.noise = noise_w;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double h = draw(rng);
    const double received = transmit_power_w * h * model.gain(points.points[i].norm());
    if (i == serving_index)
      sample.signal = received;
    else
      sample.interference += received;
  }
  const double denominator = sample.interference + sample.noise;
  sample.sinr = denominator > 0.0 ? sample.signal / denominator
                                  : std::numeric_limits<double>::infinity();
  return sample;
}

double grid_corner_sir(double alpha, double noise_term) {
  if (!(alpha > 0.0)) throw InvalidParameter("path-loss exponent must be positive");
  if (!(noise_term >= 0.0)) throw InvalidParameter("noise term must be >= 0");
  const double half = -alpha / 2.0;
  const double serving = std::pow(2.0, half);
  return serving /
         (3.0 * serving + 4.0 * std::pow(10.0, half) + std::pow(18.0, half) + noise_term);
}

double grid_noise_term(double alpha, double noise_w, double half_edge_m, double transmit_power_w,
                       double reference_gain) {
  return noise_w * std::pow(half_edge_m, alpha) / (transmit_power_w * reference_gain);
}

}  // namespace densify
