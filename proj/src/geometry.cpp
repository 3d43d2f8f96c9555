#include "densify/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "densify/error.hpp"
#include "densify/propagation.hpp"

namespace densify {

int spatial_dimension(Dimension dim) noexcept { return dim == Dimension::Plane2D ? 2 : 3; }

std::string_view to_string(Dimension dim) noexcept {
  switch (dim) {
    case Dimension::Plane2D:
      return "2d";
    case Dimension::Space3D:
      return "3d";
    case Dimension::HalfSpace3DPlus:
      return "3d+";
  }
  return "?";
}

Dimension parse_dimension(std::string_view text) {
  if (text == "2d") return Dimension::Plane2D;
  if (text == "3d") return Dimension::Space3D;
  if (text == "3d+") return Dimension::HalfSpace3DPlus;
  throw InvalidParameter("unknown dimension '" + std::string(text) + "' (expected 2d, 3d or 3d+)");
}

double unit_measure(Dimension dim) noexcept {
  using std::numbers::pi;
  switch (dim) {
    case Dimension::Plane2D:
      return pi;
    case Dimension::Space3D:
      return 4.0 * pi / 3.0;
    case Dimension::HalfSpace3DPlus:
      return 2.0 * pi / 3.0;
  }
  return 0.0;
}

double shell_factor(Dimension dim) noexcept {
  return unit_measure(dim) * spatial_dimension(dim);
}

double per_km_to_per_m(Dimension dim) noexcept {
  return dim == Dimension::Plane2D ? 1e-6 : 1e-9;
}

void DeploymentGeometry::validate() const {
  if (!(window_radius_m > 0.0) || !std::isfinite(window_radius_m))
    throw InvalidParameter("window_radius_m must be positive and finite");
}

double region_measure(const DeploymentGeometry& geometry) {
  geometry.validate();
  return unit_measure(geometry.dimension) *
         std::pow(geometry.window_radius_m, spatial_dimension(geometry.dimension));
}

PointSet sample_ppp(double density_per_m, const DeploymentGeometry& geometry, Rng& rng) {
  if (!(density_per_m >= 0.0)) throw InvalidParameter("density must be >= 0");
  PointSet set{geometry.dimension, {}};
  const double mean = density_per_m * region_measure(geometry);
  if (mean == 0.0) return set;

  std::poisson_distribution<long long> count_dist(mean);
  const auto count = count_dist(rng);
  set.points.reserve(static_cast<std::size_t>(count));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double radius = geometry.window_radius_m;
  const double two_pi = 2.0 * std::numbers::pi;
  for (long long i = 0; i < count; ++i) {
    Point p;
    if (geometry.dimension == Dimension::Plane2D) {
      const double r = radius * std::sqrt(unit(rng));
      const double theta = two_pi * unit(rng);
      p = {r * std::cos(theta), r * std::sin(theta), 0.0};
    } else {
      const double r = radius * std::cbrt(unit(rng));
      double cos_polar = 1.0 - 2.0 * unit(rng);
      if (geometry.dimension == Dimension::HalfSpace3DPlus) cos_polar = std::abs(cos_polar);
      const double sin_polar = std::sqrt(std::max(0.0, 1.0 - cos_polar * cos_polar));
      const double phi = two_pi * unit(rng);
      p = {r * sin_polar * std::cos(phi), r * sin_polar * std::sin(phi), r * cos_polar};
    }
    set.points.push_back(p);
  }
  return set;
}

PointSet make_square_grid(double half_edge_m) {
  if (!(half_edge_m > 0.0) || !std::isfinite(half_edge_m))
    throw InvalidParameter("grid half edge R must be positive");
  PointSet set{Dimension::Plane2D, {}};
  set.points.reserve(9);
  const double spacing = 2.0 * half_edge_m;
  for (int row = -1; row <= 1; ++row)
    for (int col = -1; col <= 1; ++col) set.points.push_back({col * spacing, row * spacing, 0.0});
  return set;
}

double square_grid_density_per_km2(double half_edge_m) {
  if (!(half_edge_m > 0.0)) throw InvalidParameter("grid half edge R must be positive");
  return 1e6 / (4.0 * half_edge_m * half_edge_m);
}

PointSet translated(const PointSet& set, const Point& offset) {
  PointSet out{set.dimension, set.points};
  for (auto& p : out.points) {
    p.x += offset.x;
    p.y += offset.y;
    p.z += offset.z;
  }
  return out;
}

OrderedPppDistances::OrderedPppDistances(double density_per_m, Dimension dim)
    : inv_rate_(1.0 / (density_per_m * unit_measure(dim))),
      inv_dim_(1.0 / spatial_dimension(dim)),
      dim_(spatial_dimension(dim)) {
  if (!(density_per_m > 0.0)) throw InvalidParameter("ordered PPP needs a positive density");
}

double OrderedPppDistances::next(Rng& rng) {
  arrival_ += spacing_(rng);
  const double measure = arrival_ * inv_rate_;
  return dim_ == 2 ? std::sqrt(measure) : std::cbrt(measure);
}

double default_window_radius(Dimension dim, double density_per_m, const PathLossModel& model,
                             double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0))
    throw InvalidParameter("tail_fraction must lie in (0, 1)");
  const int d = spatial_dimension(dim);
  double r_ref = model.breakpoints().empty() ? 1.0 : model.breakpoints().back();
  if (density_per_m > 0.0)
    r_ref = std::max(r_ref, std::pow(1.0 / (density_per_m * unit_measure(dim)), 1.0 / d));
  const double excess = model.far_exponent() - d;
  if (excess <= 0.0) return r_ref / tail_fraction;
  // (r_ref / W)^(alpha - d) = tail_fraction
  return r_ref * std::pow(tail_fraction, -1.0 / excess);
}

}  // namespace densify
