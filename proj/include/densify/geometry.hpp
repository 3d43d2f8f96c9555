#pragma once

#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include "densify/random.hpp"

namespace densify {

class PathLossModel;

enum class Dimension { Plane2D, Space3D, HalfSpace3DPlus };

// 2 for the plane, 3 for both volumetric deployments.
int spatial_dimension(Dimension dim) noexcept;

std::string_view to_string(Dimension dim) noexcept;
Dimension parse_dimension(std::string_view text);

// Measure of the region of radius r is unit_measure(dim) * r^d:
// pi (disc), 4pi/3 (ball), 2pi/3 (upper half-ball).
double unit_measure(Dimension dim) noexcept;

// Surface factor s with d(measure)/dr = s * r^(d-1).
double shell_factor(Dimension dim) noexcept;

// Conversion from the per-km^d densities used at the interface to per-m^d.
double per_km_to_per_m(Dimension dim) noexcept;

struct DeploymentGeometry {
  Dimension dimension = Dimension::Plane2D;
  double window_radius_m = 1000.0;

  void validate() const;
};

double region_measure(const DeploymentGeometry& geometry);

struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }
  double norm_squared() const noexcept { return x * x + y * y + z * z; }
};

struct PointSet {
  Dimension dimension = Dimension::Plane2D;
  std::vector<Point> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
};

// Homogeneous Poisson process of `density_per_m` (points per m^2 or m^3)
// restricted to the window around the origin. Points keep sampling order.
PointSet sample_ppp(double density_per_m, const DeploymentGeometry& geometry, Rng& rng);

// 3x3 lattice with spacing 2R centred on the origin (row-major from (-2R,-2R)).
PointSet make_square_grid(double half_edge_m);

// One BS per 4R^2 cell, in BSs per km^2.
double square_grid_density_per_km2(double half_edge_m);

PointSet translated(const PointSet& set, const Point& offset);

// Distances from the origin of a homogeneous Poisson process, generated in
// increasing order. The k-th distance solves measure(r_k) * density = Gamma_k
// where Gamma_k is the k-th arrival of a unit-rate Poisson process; given
// r_k, the remaining points form a Poisson process on the region beyond r_k.
class OrderedPppDistances {
 public:
  OrderedPppDistances(double density_per_m, Dimension dim);

  // Next distance; the sequence is unbounded. Requires density > 0.
  double next(Rng& rng);

 private:
  double inv_rate_;  // 1 / (density * unit_measure)
  double inv_dim_;
  int dim_;
  double arrival_ = 0.0;
  std::exponential_distribution<double> spacing_{1.0};
};

// Window radius such that, under the outermost slope alone, the expected
// interference from beyond the window is at most `tail_fraction` of the
// expected interference from beyond r_ref = max(last breakpoint, r_1), with r_1
// the radius that holds one BS on average. When the outer exponent does not
// exceed the dimension the tail does not converge; the window then falls back
// to r_ref / tail_fraction.
double default_window_radius(Dimension dim, double density_per_m, const PathLossModel& model,
                             double tail_fraction = 1e-3);

}  // namespace densify
