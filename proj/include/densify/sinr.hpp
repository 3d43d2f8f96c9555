#pragma once

#include <cstddef>
#include <optional>

#include "densify/channel.hpp"
#include "densify/geometry.hpp"
#include "densify/propagation.hpp"

namespace densify {

struct SinrSample {
  std::size_t serving_index = 0;
  double sinr = 0.0;  // +inf when interference and noise are both zero
  double signal = 0.0;
  double interference = 0.0;
  double noise = 0.0;
};

// Nearest-BS association of the user at the origin (equivalently, strongest
// mean received power, since the gain never increases with distance). Ties go
// to the lowest index. Empty set: no serving BS, the caller treats it as outage.
std::optional<std::size_t> associate(const PointSet& points, const PathLossModel& model);

// Full-load downlink SINR at the origin. Fading is drawn once per point in
// sampling order, the serving link included.
SinrSample compute_sinr(const PointSet& points, std::size_t serving_index,
                        const PathLossModel& model, const FadingModel& fading, double noise_w,
                        double transmit_power_w, Rng& rng);

// User at a corner of the centre cell of the 3x3 grid, served by the centre BS,
// single-slope exponent `alpha`:
//   2^(-a/2) / (3*2^(-a/2) + 4*10^(-a/2) + 18^(-a/2) + noise_term)
// where noise_term = sigma^2 R^alpha / (P_t K_0). Independent of R otherwise.
double grid_corner_sir(double alpha, double noise_term);

double grid_noise_term(double alpha, double noise_w, double half_edge_m, double transmit_power_w,
                       double reference_gain);

}  // namespace densify
