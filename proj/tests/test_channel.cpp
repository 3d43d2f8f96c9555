#include <doctest.h>

#include "densify/channel.hpp"
#include "densify/error.hpp"
#include "oracles.hpp"

using namespace densify;

namespace {

struct Moments {
  double mean, variance, n;
};

Moments draw_moments(const FadingModel& model, int n, std::uint64_t seed) {
  Rng rng(seed);
  FadingSampler draw(model);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = draw(rng);
    sum += h;
    sum_sq += h * h;
  }
  const double mean = sum / n;
  return {mean, sum_sq / n - mean * mean, static_cast<double>(n)};
}

}  // namespace

TEST_CASE("no fading is exactly one") {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) CHECK(sample_fading_power(FadingModel::none(), rng) == 1.0);
}

TEST_CASE("Rayleigh power gain has unit mean") {
  const auto m = draw_moments(FadingModel::rayleigh(), 1000000, 3);
  CHECK(std::abs(m.mean - 1.0) <= 0.01);
  CHECK(std::abs(m.mean - 1.0) <= 3.0 * std::sqrt(1.0 / m.n));
}

TEST_CASE("Nakagami-1 power matches the exponential law") {
  Rng rng(4);
  FadingSampler draw(FadingModel::nakagami(1.0));
  std::vector<double> samples(100000);
  for (auto& h : samples) h = draw(rng);
  const double d = oracle::ks_statistic(samples, [](double x) { return 1.0 - std::exp(-x); });
  CHECK(oracle::ks_pvalue(d, samples.size()) > 0.01);
}

TEST_CASE("every fading kind has unit mean; Nakagami variance is 1/m") {
  for (double m : {0.5, 1.0, 2.5, 8.0}) {
    CAPTURE(m);
    const auto model = FadingModel::nakagami(m);
    const auto mo = draw_moments(model, 1000000, static_cast<std::uint64_t>(m * 100));
    const double var = 1.0 / m;
    CHECK(std::abs(mo.mean - 1.0) <= 3.0 * std::sqrt(var / mo.n));
    // Var of the sample variance of Gamma(m, 1/m): (mu4 - sigma^4) / n.
    const double mu4 = 3.0 / (m * m) + 6.0 / (m * m * m);
    CHECK(std::abs(mo.variance - var) <= 3.0 * std::sqrt((mu4 - var * var) / mo.n));
    CHECK(model.second_moment() == doctest::Approx(1.0 + var));
  }
  CHECK_THROWS_AS(FadingModel::nakagami(0.4), InvalidParameter);
  CHECK(FadingModel::rayleigh().second_moment() == 2.0);
  CHECK(FadingModel::none().second_moment() == 1.0);
}

TEST_CASE("noise from SNR at the corner distance") {
  // gain(R_c) = 1e-8 with P_t = 1 W: alpha_0 = 4, R_c = 100 m.
  const auto model = PathLossModel::dual_slope(4.0, 4.0, 100.0);
  CHECK(resolve_noise(SnrAtCorner{20.0}, model, 1.0) == doctest::Approx(1e-10).epsilon(1e-12));
  CHECK(resolve_noise(AbsoluteNoise{0.0}, model, 1.0) == 0.0);
  CHECK(resolve_noise(AbsoluteNoise{3e-9}, model, 5.0) == 3e-9);

  const auto canonical = PathLossModel::dual_slope(2.0, 4.0, 100.0);
  CHECK(resolve_noise(SnrAtCorner{20.0}, canonical, 1.0) == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK_THROWS_AS(resolve_noise(SnrAtCorner{20.0}, PathLossModel::single_slope(4.0), 1.0),
                  MissingCornerDistance);
  CHECK_THROWS_AS(resolve_noise(AbsoluteNoise{-1.0}, canonical, 1.0), InvalidParameter);
}

TEST_CASE("resolved noise is homogeneous of degree one in transmit power") {
  const auto model = PathLossModel::dual_slope(1.0, 4.0, 20.0);
  const double base = resolve_noise(SnrAtCorner{7.0}, model, 1.0);
  for (double p : {0.01, 2.0, 40.0})
    CHECK(resolve_noise(SnrAtCorner{7.0}, model, p) == doctest::Approx(p * base).epsilon(1e-14));
}
