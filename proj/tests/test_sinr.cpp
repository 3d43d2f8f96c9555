#include <doctest.h>

#include "densify/error.hpp"
#include "densify/sinr.hpp"

using namespace densify;

namespace {

PointSet planar(std::initializer_list<Point> points) { return {Dimension::Plane2D, points}; }

// Explicit 3x3 grid sum with the user at the (R, R) corner of the centre cell.
double brute_grid_sir(double alpha, double noise_w, double r) {
  double signal = -1.0, total = 0.0;
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      const double dx = 2.0 * r * i - r, dy = 2.0 * r * j - r;
      const double g = std::pow(std::hypot(dx, dy), -alpha);
      if (i == 0 && j == 0) signal = g;
      total += g;
    }
  }
  return signal / (total - signal + noise_w);
}

}  // namespace

TEST_CASE("association picks the nearest point") {
  const auto model = PathLossModel::single_slope(4.0);
  CHECK(associate(planar({{3, 0, 0}, {1, 1, 0}, {0, -2, 0}}), model) == 1u);
  CHECK(associate(planar({{2, 0, 0}, {0, 2, 0}}), model) == 0u);
  CHECK_FALSE(associate(planar({}), model));
}

TEST_CASE("association equals the argmax of mean received power") {
  Rng rng(17);
  const auto model = PathLossModel({1.5, 3.0, 4.5}, {20.0, 200.0}, 3.0);
  const DeploymentGeometry geometry{Dimension::Plane2D, 500.0};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto set = sample_ppp(40e-6, geometry, rng);
    const auto chosen = associate(set, model);
    if (set.empty()) {
      CHECK_FALSE(chosen);
      continue;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < set.size(); ++i)
      if (model.gain(set.points[i].norm()) > model.gain(set.points[best].norm())) best = i;
    REQUIRE(chosen.has_value());
    REQUIRE(model.gain(set.points[*chosen].norm()) == model.gain(set.points[best].norm()));
  }
}

TEST_CASE("grid corner SIR closed form") {
  CHECK(grid_corner_sir(4.0, 0.0) == doctest::Approx(0.25 / (0.75 + 0.04 + 1.0 / 324.0)));
  CHECK(grid_corner_sir(4.0, 0.0) == doctest::Approx(0.31522).epsilon(1e-4));
  const double inv_r4 = 1e-8;  // R = 100 m
  for (double alpha : {2.0, 3.0, 4.0, 6.0}) {
    for (double noise_w : {0.0, 1e-12, 3e-9}) {
      for (double r : {10.0, 100.0, 731.0}) {
        const double term = grid_noise_term(alpha, noise_w, r, 1.0, 1.0);
        CAPTURE(alpha);
        CAPTURE(noise_w);
        CAPTURE(r);
        CHECK(grid_corner_sir(alpha, term) ==
              doctest::Approx(brute_grid_sir(alpha, noise_w, r)).epsilon(1e-12));
      }
    }
  }
  CHECK(grid_noise_term(4.0, 2e-9, 100.0, 2.0, 1.0) == doctest::Approx(2e-9 / (2.0 * inv_r4)));
  CHECK(grid_corner_sir(200.0, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("grid SIR computed from points is independent of the cell size") {
  const auto model = PathLossModel::single_slope(4.0);
  Rng rng(1);
  for (double r : {50.0, 100.0, 200.0}) {
    const auto points = translated(make_square_grid(r), {-r, -r, 0.0});
    const auto serving = associate(points, model).value();
    const auto s = compute_sinr(points, serving, model, FadingModel::none(), 0.0, 1.0, rng);
    CHECK(s.sinr == doctest::Approx(grid_corner_sir(4.0, 0.0)).epsilon(1e-12));
  }
}

TEST_CASE("SINR components") {
  const auto model = PathLossModel::single_slope(2.0);
  const auto set = planar({{1, 0, 0}, {0, 2, 0}, {-4, 0, 0}});
  Rng rng(3);
  const auto s = compute_sinr(set, 0, model, FadingModel::none(), 0.5, 2.0, rng);
  CHECK(s.signal == doctest::Approx(2.0));
  CHECK(s.interference == doctest::Approx(2.0 * (0.25 + 1.0 / 16.0)));
  CHECK(s.noise == 0.5);
  CHECK(s.sinr == doctest::Approx(2.0 / (0.625 + 0.5)));
  const auto alone = compute_sinr(planar({{1, 0, 0}}), 0, model, FadingModel::none(), 0.0, 1.0, rng);
  CHECK(std::isinf(alone.sinr));
}

TEST_CASE("SIR is invariant to scaling distances and transmit power") {
  Rng rng(8);
  const auto single = PathLossModel::single_slope(3.3);
  const DeploymentGeometry geometry{Dimension::Space3D, 300.0};
  for (int trial = 0; trial < 200; ++trial) {
    auto set = sample_ppp(2e-6, geometry, rng);
    if (set.size() < 2) continue;
    const auto serving = associate(set, single).value();
    const std::uint64_t fading_seed = rng();
    Rng a(fading_seed), b(fading_seed), c(fading_seed);
    const double base = compute_sinr(set, serving, single, FadingModel::rayleigh(), 0.0, 1.0, a).sinr;
    auto scaled = set;
    for (auto& p : scaled.points) p = {p.x * 7.5, p.y * 7.5, p.z * 7.5};
    const double s1 = compute_sinr(scaled, serving, single, FadingModel::rayleigh(), 0.0, 1.0, b).sinr;
    const double s2 = compute_sinr(set, serving, single, FadingModel::rayleigh(), 0.0, 40.0, c).sinr;
    REQUIRE(s1 == doctest::Approx(base).epsilon(1e-12));
    REQUIRE(s2 == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("removing an interferer never lowers SINR") {
  Rng rng(21);
  const auto model = PathLossModel::dual_slope(2.0, 4.0, 100.0);
  const DeploymentGeometry geometry{Dimension::Plane2D, 800.0};
  for (int trial = 0; trial < 500; ++trial) {
    auto set = sample_ppp(20e-6, geometry, rng);
    if (set.size() < 2) continue;
    const auto serving = associate(set, model).value();
    const double before = compute_sinr(set, serving, model, FadingModel::none(), 1e-9, 1.0, rng).sinr;
    const std::size_t drop = serving == 0 ? 1 : 0;
    auto reduced = set;
    reduced.points.erase(reduced.points.begin() + static_cast<std::ptrdiff_t>(drop));
    const std::size_t new_serving = drop < serving ? serving - 1 : serving;
    const double after =
        compute_sinr(reduced, new_serving, model, FadingModel::none(), 1e-9, 1.0, rng).sinr;
    REQUIRE(after >= before);
  }
}
