#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <set>

#include "densify/error.hpp"
#include "densify/geometry.hpp"
#include "densify/propagation.hpp"
#include "oracles.hpp"

using namespace densify;
using std::numbers::pi;

TEST_CASE("region measure of disc, ball and half-ball") {
  CHECK(region_measure({Dimension::Plane2D, 1000.0}) == doctest::Approx(pi * 1e6).epsilon(1e-15));
  CHECK(region_measure({Dimension::Space3D, 1.0}) == doctest::Approx(4.0 * pi / 3.0));
  CHECK(region_measure({Dimension::HalfSpace3DPlus, 1.0}) == doctest::Approx(2.0 * pi / 3.0));
  CHECK_THROWS_AS(region_measure({Dimension::Plane2D, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(region_measure({Dimension::Plane2D, -5.0}), InvalidParameter);
}

TEST_CASE("sample_ppp with zero density is empty") {
  Rng rng(1);
  for (auto dim : {Dimension::Plane2D, Dimension::Space3D, Dimension::HalfSpace3DPlus})
    CHECK(sample_ppp(0.0, {dim, 100.0}, rng).empty());
  CHECK_THROWS_AS(sample_ppp(-1.0, {Dimension::Plane2D, 100.0}, rng), InvalidParameter);
}

TEST_CASE("sample_ppp count is Poisson with mean density times measure") {
  const DeploymentGeometry geometry{Dimension::Plane2D, 1000.0};
  const double density = 25e-6;  // 25 per km^2
  const double mean = density * region_measure(geometry);
  CHECK(mean == doctest::Approx(25.0 * pi));

  Rng rng(2024);
  std::vector<long long> counts;
  counts.reserve(100000);
  double total = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const auto n = static_cast<long long>(sample_ppp(density, geometry, rng).size());
    counts.push_back(n);
    total += static_cast<double>(n);
  }
  CHECK(std::abs(total / 1e5 - mean) / mean < 0.01);
  CHECK(oracle::poisson_gof_pvalue(counts, mean) > 0.01);
}

TEST_CASE("sample_ppp points lie in the region and centre on its centroid") {
  Rng rng(7);
  for (auto dim : {Dimension::Plane2D, Dimension::Space3D, Dimension::HalfSpace3DPlus}) {
    CAPTURE(to_string(dim));
    const DeploymentGeometry geometry{dim, 50.0};
    const double density = 2000.0 / region_measure(geometry);
    double sx = 0, sy = 0, sz = 0, sxx = 0, syy = 0, szz = 0;
    std::size_t n = 0;
    for (int rep = 0; rep < 20; ++rep) {
      for (const auto& p : sample_ppp(density, geometry, rng).points) {
        REQUIRE(p.norm() <= 50.0);
        if (dim == Dimension::Plane2D) REQUIRE(p.z == 0.0);
        if (dim == Dimension::HalfSpace3DPlus) REQUIRE(p.z >= 0.0);
        sx += p.x, sy += p.y, sz += p.z;
        sxx += p.x * p.x, syy += p.y * p.y, szz += p.z * p.z;
        ++n;
      }
    }
    const double N = static_cast<double>(n);
    const double z_centroid = dim == Dimension::HalfSpace3DPlus ? 3.0 * 50.0 / 8.0 : 0.0;
    auto within_3_sigma = [N](double sum, double sum_sq, double centre) {
      const double mean = sum / N;
      const double sd = std::sqrt(sum_sq / N - mean * mean);
      return std::abs(mean - centre) <= 3.0 * sd / std::sqrt(N);
    };
    CHECK(within_3_sigma(sx, sxx, 0.0));
    CHECK(within_3_sigma(sy, syy, 0.0));
    CHECK(within_3_sigma(sz, szz, z_centroid));
  }
}

TEST_CASE("nearest-point distance of a planar PPP follows 1 - exp(-pi lambda r^2)") {
  const double density = 25e-6;
  const DeploymentGeometry geometry{Dimension::Plane2D, 1000.0};
  Rng rng(99);
  std::vector<double> nearest;
  nearest.reserve(100000);
  for (int i = 0; i < 100000; ++i) {
    const auto set = sample_ppp(density, geometry, rng);
    if (set.empty()) continue;  // probability e^-78
    double best = INFINITY;
    for (const auto& p : set.points) best = std::min(best, p.norm());
    nearest.push_back(best);
  }
  auto cdf = [density](double r) { return 1.0 - std::exp(-pi * density * r * r); };
  const double d = oracle::ks_statistic(nearest, cdf);
  CHECK(oracle::ks_pvalue(d, nearest.size()) > 0.01);
}

TEST_CASE("ordered distances reproduce the nearest and second-nearest laws") {
  const double density = 1e-4;
  OrderedPppDistances proto(density, Dimension::Plane2D);
  Rng rng(5);
  std::vector<double> first, second;
  for (int i = 0; i < 50000; ++i) {
    OrderedPppDistances d = proto;
    const double r1 = d.next(rng);
    const double r2 = d.next(rng);
    REQUIRE(r2 >= r1);
    first.push_back(r1);
    second.push_back(r2);
  }
  // Count in the disc of radius r is Poisson(m), m = pi lambda r^2.
  auto p_at_least_1 = [density](double r) { return 1.0 - std::exp(-pi * density * r * r); };
  auto p_at_least_2 = [density](double r) {
    const double m = pi * density * r * r;
    return 1.0 - std::exp(-m) * (1.0 + m);
  };
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(first, p_at_least_1), first.size()) > 0.01);
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(second, p_at_least_2), second.size()) > 0.01);

  // 3D ball: P(r1 <= r) = 1 - exp(-lambda 4/3 pi r^3).
  OrderedPppDistances ball(1e-6, Dimension::Space3D);
  std::vector<double> first3;
  for (int i = 0; i < 20000; ++i) {
    OrderedPppDistances d = ball;
    first3.push_back(d.next(rng));
  }
  auto cdf3 = [](double r) { return 1.0 - std::exp(-1e-6 * 4.0 / 3.0 * pi * r * r * r); };
  CHECK(oracle::ks_pvalue(oracle::ks_statistic(first3, cdf3), first3.size()) > 0.01);
  CHECK_THROWS_AS(OrderedPppDistances(0.0, Dimension::Plane2D), InvalidParameter);
}

TEST_CASE("square grid of half edge R") {
  const auto grid = make_square_grid(100.0);
  REQUIRE(grid.size() == 9);
  CHECK(grid.points[4].norm() == 0.0);
  // inter-site distance 2R = 200 m
  CHECK(std::hypot(grid.points[5].x - grid.points[4].x, grid.points[5].y - grid.points[4].y) ==
        doctest::Approx(200.0));
  CHECK(square_grid_density_per_km2(100.0) == doctest::Approx(25.0));
  for (double r : {1.0, 37.5, 100.0}) {
    const Point corner{r, r, 0.0};
    CHECK(std::hypot(corner.x, corner.y) == doctest::Approx(std::sqrt(2.0) * r));
  }
  CHECK_THROWS_AS(make_square_grid(0.0), InvalidParameter);
  CHECK_THROWS_AS(make_square_grid(-1.0), InvalidParameter);
}

TEST_CASE("square grid is invariant under a quarter turn") {
  const auto grid = make_square_grid(12.5);
  auto key = [](const Point& p) { return std::pair{std::lround(p.x * 1e6), std::lround(p.y * 1e6)}; };
  std::set<std::pair<long, long>> original, rotated;
  for (const auto& p : grid.points) {
    original.insert(key(p));
    rotated.insert(key({-p.y, p.x, 0.0}));
  }
  CHECK(original == rotated);
}

TEST_CASE("default window bounds the outer-slope tail fraction") {
  const auto model = PathLossModel::dual_slope(2.0, 4.0, 100.0);
  // At 10 per km^2 the one-BS radius exceeds R_c.
  const double density = 10e-6;
  const double r1 = std::sqrt(1.0 / (pi * density));
  const double w = default_window_radius(Dimension::Plane2D, density, model);
  CHECK(w == doctest::Approx(r1 * std::sqrt(1000.0)));
  // Tail beyond W relative to tail beyond r_ref under alpha = 4 is (r_ref / W)^2.
  CHECK(std::pow(r1 / w, 2.0) == doctest::Approx(1e-3));
  // Dense network: r_ref is the breakpoint.
  CHECK(default_window_radius(Dimension::Plane2D, 1.0, model) ==
        doctest::Approx(100.0 * std::sqrt(1000.0)));
  // 3D, alpha = 4: exponent excess 1.
  CHECK(default_window_radius(Dimension::Space3D, 1.0, model) == doctest::Approx(100.0 * 1000.0));
  // Non-convergent tail falls back to r_ref / fraction.
  CHECK(default_window_radius(Dimension::Space3D, 1.0, PathLossModel::dual_slope(2, 3, 50)) ==
        doctest::Approx(50.0 * 1000.0));
}
