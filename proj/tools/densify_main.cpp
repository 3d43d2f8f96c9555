// densify: density-sweep experiments for downlink networks with multi-slope
// path loss. See README.md for the configuration schema.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "densify/config.hpp"
#include "densify/error.hpp"
#include "densify/experiments.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw densify::Error("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage and potential-throughput scaling of dense downlink networks", "densify"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> out;
  std::optional<unsigned> threads;

  for (auto kind : {densify::ExperimentKind::CoverageSweep, densify::ExperimentKind::ThroughputSweep,
                    densify::ExperimentKind::Ccdf, densify::ExperimentKind::GridExample,
                    densify::ExperimentKind::RegionsTable, densify::ExperimentKind::CriticalDensity,
                    densify::ExperimentKind::ScalingExponent}) {
    auto* sub = app.add_subcommand(std::string(densify::to_string(kind)));
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--seed", seed, "master seed (overrides the config)");
    sub->add_option("--trials", trials, "Monte Carlo trials per point (overrides the config)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "output CSV path ('-' for stdout)");
    sub->add_option("--threads", threads, "worker threads; results do not depend on it")
        ->envname("DENSIFY_THREADS");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const auto kind = *densify::parse_experiment_kind(app.get_subcommands().front()->get_name());
    densify::RunConfig config = config_path.empty()
                                    ? densify::default_config(kind)
                                    : densify::parse_config(read_file(config_path), kind);
    if (seed) config.seed = *seed;
    if (trials) config.trials = *trials;
    if (threads) config.engine.threads = *threads;
    if (out) config.output = *out;
    if (config_path.empty() && densify::needs_density_grid(kind))
      throw densify::ConfigError("densities", "required; pass --config");

    const auto result = densify::run_experiment(config);
    const std::string target = config.output.value_or("-");
    if (target == "-") {
      std::cout << result.csv;
    } else {
      std::ofstream file(target, std::ios::binary);
      if (!file) throw densify::Error("cannot open output file '" + target + "'");
      file << result.csv;
      if (!file.flush()) throw densify::Error("failed writing '" + target + "'");
    }
    std::cerr << result.summary << '\n';
  } catch (const std::exception& e) {
    std::cerr << "densify: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
