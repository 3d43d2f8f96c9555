#include "densify/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include <boost/math/distributions/beta.hpp>

#include "densify/error.hpp"

namespace densify {

void NetworkScenario::validate() const {
  if (!(density >= 0.0) || !std::isfinite(density))
    throw InvalidParameter("density must be finite and >= 0");
  if (window_radius_m) DeploymentGeometry{dimension, *window_radius_m}.validate();
  fading.validate();
  if (!(transmit_power_w > 0.0)) throw InvalidParameter("transmit power must be positive");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0)) throw InvalidParameter("thresholds must be positive");
    if (i > 0 && thresholds[i] < thresholds[i - 1])
      throw InvalidParameter("thresholds must be sorted ascending");
  }
  (void)noise_power_w();
}

DeploymentGeometry NetworkScenario::resolved_geometry() const {
  if (window_radius_m) return {dimension, *window_radius_m};
  return {dimension, default_window_radius(dimension, density_per_m(), pathloss)};
}

unsigned EngineOptions::resolved_threads() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("DENSIFY_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CoverageEstimate make_coverage_estimate(std::uint64_t covered, std::uint64_t trials,
                                        std::uint64_t seed) {
  if (trials == 0) throw InvalidParameter("coverage estimate needs at least one trial");
  if (covered > trials) throw InvalidParameter("more successes than trials");
  CoverageEstimate est;
  est.covered = covered;
  est.trials = trials;
  est.seed = seed;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(covered) / n;
  est.probability = p;
  constexpr double z = 1.959963984540054;
  if (n * p < 10.0 || n * (1.0 - p) < 10.0) {
    namespace bm = boost::math;
    const double x = static_cast<double>(covered);
    constexpr double tail = 0.025;
    est.ci_lower = covered == 0 ? 0.0 : bm::quantile(bm::beta_distribution<>(x, n - x + 1.0), tail);
    est.ci_upper =
        covered == trials ? 1.0 : bm::quantile(bm::beta_distribution<>(x + 1.0, n - x), 1.0 - tail);
    est.ci_halfwidth = std::max(p - est.ci_lower, est.ci_upper - p);
    est.exact_interval = true;
  } else {
    est.ci_halfwidth = z * std::sqrt(p * (1.0 - p) / n);
    est.ci_lower = std::max(0.0, p - est.ci_halfwidth);
    est.ci_upper = std::min(1.0, p + est.ci_halfwidth);
  }
  est.ci_halfwidth = std::min(est.ci_halfwidth, 0.5);
  return est;
}

namespace {

// Per-scenario constants shared by every trial.
class TrialKernel {
 public:
  TrialKernel(const NetworkScenario& scenario, const EngineOptions& options)
      : model_(scenario.pathloss),
        fading_(scenario.fading),
        dim_(scenario.dimension),
        d_(spatial_dimension(scenario.dimension)),
        density_(scenario.density_per_m()),
        window_(scenario.resolved_geometry().window_radius_m),
        power_(scenario.transmit_power_w),
        noise_(scenario.noise_power_w()),
        mean_scale_(power_ * density_ * shell_factor(dim_)),
        var_scale_(power_ * power_ * density_ * shell_factor(dim_) * fading_.second_moment()),
        tolerance_(options.far_field_tolerance),
        min_exact_(std::max<std::size_t>(1, options.min_exact_points)) {
    if (!(tolerance_ >= 0.0)) throw InvalidParameter("far_field_tolerance must be >= 0");
  }

  double operator()(Rng& rng) const {
    if (density_ == 0.0) return 0.0;
    OrderedPppDistances distances(density_, dim_);
    FadingSampler fade(fading_);

    double r = distances.next(rng);
    if (r > window_) return 0.0;  // empty window: outage
    const double signal = power_ * fade(rng) * model_.gain(r);

    double interference = 0.0;
    std::size_t drawn = 1;
    std::size_t next_check = min_exact_;
    for (;;) {
      if (tolerance_ > 0.0 && drawn >= next_check) {
        // Points beyond r are a Poisson process on (r, window]; it suffices to
        // know the mean and variance of their contribution.
        const double far_mean = mean_scale_ * model_.radial_moment(r, window_, d_, 1.0);
        const double far_var = var_scale_ * model_.radial_moment(r, window_, d_, 2.0);
        if (std::sqrt(far_var) <= tolerance_ * (interference + noise_ + far_mean)) {
          if (far_mean > 0.0 && far_var > 0.0) {
            // Moment-matched Gamma stand-in for the remaining shot noise.
            const double scale = far_var / far_mean;
            interference += std::gamma_distribution<double>(far_mean / scale, scale)(rng);
          }
          break;
        }
        next_check = drawn + std::max<std::size_t>(8, drawn / 4);
      }
      const double next = distances.next(rng);
      if (next > window_) break;
      r = next;
      interference += power_ * fade(rng) * model_.gain(r);
      ++drawn;
    }
    const double denominator = interference + noise_;
    return denominator > 0.0 ? signal / denominator : std::numeric_limits<double>::infinity();
  }

 private:
  PathLossModel model_;
  FadingModel fading_;
  Dimension dim_;
  int d_;
  double density_;
  double window_;
  double power_;
  double noise_;
  double mean_scale_;
  double var_scale_;
  double tolerance_;
  std::size_t min_exact_;
};

// Splits [0, trials) into contiguous blocks, one per worker. Each trial owns
// its stream, so the split never changes the draws.
template <class Body>
void parallel_trials(std::uint64_t trials, unsigned threads, Body&& body) {
  const std::uint64_t workers = std::min<std::uint64_t>(std::max(1u, threads), trials);
  if (workers <= 1) {
    body(0, 0, trials);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint64_t block = trials / workers;
  const std::uint64_t extra = trials % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + block + (w < extra ? 1 : 0);
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    begin = end;
  }
}

}  // namespace

std::vector<double> sample_sinr(const NetworkScenario& scenario, std::uint64_t trials,
                                std::uint64_t seed, const EngineOptions& options) {
  scenario.validate();
  const TrialKernel kernel(scenario, options);
  std::vector<double> values(trials);
  parallel_trials(trials, options.resolved_threads(),
                  [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t k = begin; k < end; ++k) {
                      Rng rng = make_stream(seed, {k});
                      values[k] = kernel(rng);
                    }
                  });
  return values;
}

std::vector<CoverageEstimate> estimate_sir_ccdf(const NetworkScenario& scenario,
                                                std::span<const double> thresholds,
                                                std::uint64_t trials, std::uint64_t seed,
                                                const EngineOptions& options) {
  if (trials == 0) throw InvalidParameter("trials must be >= 1");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0)) throw InvalidParameter("thresholds must be positive");
    if (i > 0 && thresholds[i] < thresholds[i - 1])
      throw InvalidParameter("thresholds must be sorted ascending");
  }
  scenario.validate();
  const TrialKernel kernel(scenario, options);
  const unsigned threads = options.resolved_threads();

  // histogram[w][k]: trials of worker w whose SINR exceeds exactly k thresholds.
  const std::size_t buckets = thresholds.size() + 1;
  std::vector<std::vector<std::uint64_t>> histogram(
      std::min<std::uint64_t>(std::max(1u, threads), trials), std::vector<std::uint64_t>(buckets));
  parallel_trials(trials, threads, [&](std::uint64_t w, std::uint64_t begin, std::uint64_t end) {
    auto& local = histogram[w];
    for (std::uint64_t k = begin; k < end; ++k) {
      Rng rng = make_stream(seed, {k});
      const double sinr = kernel(rng);
      const auto exceeded = static_cast<std::size_t>(
          std::lower_bound(thresholds.begin(), thresholds.end(), sinr) - thresholds.begin());
      ++local[exceeded];
    }
  });

  std::vector<std::uint64_t> total(buckets, 0);
  for (const auto& local : histogram)
    for (std::size_t k = 0; k < buckets; ++k) total[k] += local[k];

  std::vector<CoverageEstimate> out;
  out.reserve(thresholds.size());
  std::uint64_t above = trials - total[0];
  for (std::size_t t = 0; t < thresholds.size(); ++t) {
    out.push_back(make_coverage_estimate(above, trials, seed));
    above -= total[t + 1];
  }
  return out;
}

CoverageEstimate estimate_coverage(const NetworkScenario& scenario, double threshold,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const EngineOptions& options) {
  const double single[] = {threshold};
  return estimate_sir_ccdf(scenario, single, trials, seed, options).front();
}

double potential_throughput(double density, double threshold, double coverage) {
  if (!(coverage >= 0.0 && coverage <= 1.0)) throw InvalidParameter("coverage must lie in [0, 1]");
  if (!(density >= 0.0)) throw InvalidParameter("density must be >= 0");
  if (!(threshold > 0.0)) throw InvalidParameter("threshold must be positive");
  return density * std::log2(1.0 + threshold) * coverage;
}

}  // namespace densify
