#include "densify/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "densify/analysis.hpp"
#include "densify/error.hpp"

namespace densify {

using nlohmann::json;

namespace {

constexpr ExperimentKind kAllKinds[] = {
    ExperimentKind::CoverageSweep,   ExperimentKind::ThroughputSweep, ExperimentKind::Ccdf,
    ExperimentKind::GridExample,     ExperimentKind::RegionsTable,    ExperimentKind::CriticalDensity,
    ExperimentKind::ScalingExponent,
};

// Reads one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string field(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return object_.contains(key) && !object_.at(key).is_null();
  }

  const json& at(const std::string& key) {
    seen_.insert(key);
    if (!object_.contains(key)) throw ConfigError(field(key), "required field is missing");
    return object_.at(key);
  }

  double number(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(field(key), "expected a finite number");
    return x;
  }

  double number_or(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  std::uint64_t unsigned_or(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_unsigned()) throw ConfigError(field(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::string string(const std::string& key) {
    const json& v = at(key);
    if (!v.is_string()) throw ConfigError(field(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = at(key);
    if (!v.is_array()) throw ConfigError(field(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number() || !std::isfinite(v[i].get<double>()))
        throw ConfigError(field(key) + "[" + std::to_string(i) + "]", "expected a finite number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  ObjectReader child(const std::string& key) { return ObjectReader(at(key), field(key)); }

  void finish() const {
    for (const auto& [key, value] : object_.items())
      if (!seen_.contains(key)) throw ConfigError(field(key), "unknown key");
  }

 private:
  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

PathLossModel read_pathloss(ObjectReader reader) {
  const auto exponents = reader.numbers("exponents");
  const auto breakpoints =
      reader.has("breakpoints_m") ? reader.numbers("breakpoints_m") : std::vector<double>{};
  const double reference_gain = reader.number_or("reference_gain", 1.0);
  reader.finish();
  try {
    return PathLossModel(exponents, breakpoints, reference_gain);
  } catch (const InvalidModel& e) {
    throw ConfigError(reader.field("exponents"), e.what());
  }
}

FadingModel read_fading(ObjectReader reader) {
  const std::string kind = reader.string("kind");
  FadingModel model;
  if (kind == "none") {
    model = FadingModel::none();
  } else if (kind == "rayleigh") {
    model = FadingModel::rayleigh();
  } else if (kind == "nakagami") {
    const double m = reader.number("m");
    require(m >= 0.5, reader.field("m"), "Nakagami shape must be >= 0.5");
    model = FadingModel::nakagami(m);
  } else {
    throw ConfigError(reader.field("kind"), "expected none, rayleigh or nakagami");
  }
  reader.finish();
  return model;
}

NoiseSpec read_noise(ObjectReader reader) {
  const bool snr = reader.has("snr_at_corner_db");
  const bool absolute = reader.has("power_w");
  require(snr != absolute, reader.field("snr_at_corner_db"),
          "exactly one of snr_at_corner_db and power_w must be given");
  NoiseSpec spec;
  if (snr) {
    spec = SnrAtCorner{reader.number("snr_at_corner_db")};
  } else {
    const double power = reader.number("power_w");
    require(power >= 0.0, reader.field("power_w"), "noise power must be >= 0");
    spec = AbsoluteNoise{power};
  }
  reader.finish();
  return spec;
}

void read_scenario(ObjectReader reader, RunConfig& config) {
  NetworkScenario& s = config.scenario;
  if (reader.has("dimension")) {
    try {
      s.dimension = parse_dimension(reader.string("dimension"));
    } catch (const InvalidParameter& e) {
      throw ConfigError(reader.field("dimension"), e.what());
    }
  }
  const std::string suffix(density_key_suffix(s.dimension));
  const std::string other = s.dimension == Dimension::Plane2D ? "per_km3" : "per_km2";
  require(!reader.has("density_" + other), reader.field("density_" + other),
          "density unit does not match the dimension");
  if (reader.has("density_" + suffix)) {
    s.density = reader.number("density_" + suffix);
    require(s.density >= 0.0, reader.field("density_" + suffix), "density must be >= 0");
  } else {
    require(config.experiment != ExperimentKind::Ccdf, reader.field("density_" + suffix),
            "required for the ccdf experiment");
  }
  if (reader.has("window_radius_m")) {
    const double w = reader.number("window_radius_m");
    require(w > 0.0, reader.field("window_radius_m"), "window radius must be positive");
    s.window_radius_m = w;
  }
  if (reader.has("pathloss")) s.pathloss = read_pathloss(reader.child("pathloss"));
  if (reader.has("fading")) s.fading = read_fading(reader.child("fading"));
  if (reader.has("noise")) s.noise = read_noise(reader.child("noise"));
  s.transmit_power_w = reader.number_or("transmit_power_w", s.transmit_power_w);
  require(s.transmit_power_w > 0.0, reader.field("transmit_power_w"), "must be positive");
  if (reader.has("thresholds_linear")) {
    s.thresholds = reader.numbers("thresholds_linear");
    const std::string field = reader.field("thresholds_linear");
    require(!s.thresholds.empty(), field, "at least one threshold is required");
    for (double t : s.thresholds) require(t > 0.0, field, "thresholds must be positive");
    require(std::is_sorted(s.thresholds.begin(), s.thresholds.end()), field,
            "thresholds must be sorted ascending");
  }
  reader.finish();
  if (std::holds_alternative<SnrAtCorner>(s.noise) && !s.pathloss.corner_distance())
    throw ConfigError(reader.field("noise.snr_at_corner_db"),
                      "needs a path-loss model with at least one breakpoint");
}

std::vector<double> read_densities(ObjectReader reader, Dimension dim) {
  const std::string suffix(density_key_suffix(dim));
  std::vector<double> values;
  if (reader.has("values_" + suffix)) {
    values = reader.numbers("values_" + suffix);
  } else {
    const double lo = reader.number("min_" + suffix);
    const double hi = reader.number("max_" + suffix);
    const auto per_decade = reader.unsigned_or("points_per_decade", 8);
    const std::string field = reader.field("min_" + suffix);
    require(lo > 0.0 && hi > lo, field, "need 0 < min < max");
    require(per_decade >= 1, reader.field("points_per_decade"), "must be >= 1");
    values = log_spaced_densities(lo, hi, static_cast<int>(per_decade));
  }
  const std::string field = reader.field("values_" + suffix);
  require(!values.empty(), field, "at least one density is required");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] > 0.0, field, "densities must be positive");
    require(i == 0 || values[i] > values[i - 1], field, "densities must be strictly increasing");
  }
  reader.finish();
  return values;
}

json pathloss_json(const PathLossModel& model) {
  return {{"exponents", model.exponents()},
          {"breakpoints_m", model.breakpoints()},
          {"reference_gain", model.reference_gain()}};
}

json fading_json(const FadingModel& fading) {
  json j = {{"kind", std::string(to_string(fading.kind))}};
  if (fading.kind == FadingModel::Kind::Nakagami) j["m"] = fading.shape;
  return j;
}

json noise_json(const NoiseSpec& noise) {
  if (const auto* snr = std::get_if<SnrAtCorner>(&noise)) return {{"snr_at_corner_db", snr->snr_db}};
  return {{"power_w", std::get<AbsoluteNoise>(noise).power_w}};
}

bool uses_scenario(ExperimentKind kind) noexcept {
  return kind != ExperimentKind::GridExample && kind != ExperimentKind::RegionsTable;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::CoverageSweep:
      return "coverage-sweep";
    case ExperimentKind::ThroughputSweep:
      return "throughput-sweep";
    case ExperimentKind::Ccdf:
      return "ccdf";
    case ExperimentKind::GridExample:
      return "grid-example";
    case ExperimentKind::RegionsTable:
      return "regions-table";
    case ExperimentKind::CriticalDensity:
      return "critical-density";
    case ExperimentKind::ScalingExponent:
      return "scaling-exponent";
  }
  return "?";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view text) noexcept {
  for (auto kind : kAllKinds)
    if (to_string(kind) == text) return kind;
  return std::nullopt;
}

bool needs_density_grid(ExperimentKind kind) noexcept {
  return kind == ExperimentKind::CoverageSweep || kind == ExperimentKind::ThroughputSweep ||
         kind == ExperimentKind::CriticalDensity || kind == ExperimentKind::ScalingExponent;
}

std::string_view density_key_suffix(Dimension dim) noexcept {
  return dim == Dimension::Plane2D ? "per_km2" : "per_km3";
}

RunConfig default_config(ExperimentKind kind) {
  RunConfig config;
  config.experiment = kind;
  config.scenario.thresholds = {0.5, 5.0};
  return config;
}

RunConfig parse_config(std::string_view text, std::optional<ExperimentKind> kind) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  ObjectReader reader(root, "");

  std::optional<ExperimentKind> declared;
  if (reader.has("experiment")) {
    declared = parse_experiment_kind(reader.string("experiment"));
    if (!declared) throw ConfigError("experiment", "unknown experiment kind");
  }
  if (kind && declared && *kind != *declared)
    throw ConfigError("experiment", "config declares '" + std::string(to_string(*declared)) +
                                        "' but '" + std::string(to_string(*kind)) +
                                        "' was requested");
  if (!kind && !declared) throw ConfigError("experiment", "experiment kind is required");

  RunConfig config = default_config(kind ? *kind : *declared);
  config.trials = reader.unsigned_or("trials", config.trials);
  require(config.trials >= 1, "trials", "must be >= 1");
  config.seed = reader.unsigned_or("seed", config.seed);
  if (reader.has("output")) config.output = reader.string("output");
  if (reader.has("threads")) config.engine.threads = static_cast<unsigned>(reader.unsigned_or("threads", 0));

  if (reader.has("scenario")) read_scenario(reader.child("scenario"), config);
  else if (config.experiment == ExperimentKind::Ccdf)
    throw ConfigError("scenario", "required for the ccdf experiment");

  if (reader.has("densities")) {
    config.densities = read_densities(reader.child("densities"), config.scenario.dimension);
  } else if (needs_density_grid(config.experiment)) {
    throw ConfigError("densities", "required for the " +
                                       std::string(to_string(config.experiment)) + " experiment");
  }

  if (reader.has("engine")) {
    auto engine = reader.child("engine");
    config.engine.far_field_tolerance =
        engine.number_or("far_field_tolerance", config.engine.far_field_tolerance);
    require(config.engine.far_field_tolerance >= 0.0, engine.field("far_field_tolerance"),
            "must be >= 0");
    config.engine.min_exact_points = static_cast<std::size_t>(
        engine.unsigned_or("min_exact_points", config.engine.min_exact_points));
    require(config.engine.min_exact_points >= 1, engine.field("min_exact_points"), "must be >= 1");
    engine.finish();
  }

  if (reader.has("grid")) {
    auto grid = reader.child("grid");
    config.grid.alpha = grid.number_or("alpha", config.grid.alpha);
    require(config.grid.alpha > 0.0, grid.field("alpha"), "must be positive");
    if (grid.has("half_edges_m")) config.grid.half_edges_m = grid.numbers("half_edges_m");
    require(!config.grid.half_edges_m.empty(), grid.field("half_edges_m"), "must not be empty");
    for (double r : config.grid.half_edges_m)
      require(r > 0.0, grid.field("half_edges_m"), "half edges must be positive");
    config.grid.noise_term = grid.number_or("noise_term", config.grid.noise_term);
    require(config.grid.noise_term >= 0.0, grid.field("noise_term"), "must be >= 0");
    grid.finish();
  }

  if (reader.has("regions")) {
    auto regions = reader.child("regions");
    config.regions.fluctuation_distance_m =
        regions.number_or("fluctuation_distance_m", config.regions.fluctuation_distance_m);
    config.regions.receive_height_m =
        regions.number_or("receive_height_m", config.regions.receive_height_m);
    require(config.regions.fluctuation_distance_m > 0.0, regions.field("fluctuation_distance_m"),
            "must be positive");
    require(config.regions.receive_height_m > 0.0, regions.field("receive_height_m"),
            "must be positive");
    regions.finish();
  }

  if (reader.has("scaling")) {
    auto scaling = reader.child("scaling");
    const std::string key =
        "tail_min_density_" + std::string(density_key_suffix(config.scenario.dimension));
    if (scaling.has(key)) {
      config.scaling.tail_min_density = scaling.number(key);
      require(*config.scaling.tail_min_density > 0.0, scaling.field(key), "must be positive");
    }
    scaling.finish();
  }

  reader.finish();
  return config;
}

json resolved_config(const RunConfig& config) {
  json j;
  j["experiment"] = std::string(to_string(config.experiment));
  j["seed"] = config.seed;
  const std::string suffix(density_key_suffix(config.scenario.dimension));

  if (uses_scenario(config.experiment)) {
    const NetworkScenario& s = config.scenario;
    json scenario = {
        {"dimension", std::string(to_string(s.dimension))},
        {"pathloss", pathloss_json(s.pathloss)},
        {"fading", fading_json(s.fading)},
        {"noise", noise_json(s.noise)},
        {"transmit_power_w", s.transmit_power_w},
        {"thresholds_linear", s.thresholds},
    };
    if (s.window_radius_m) scenario["window_radius_m"] = *s.window_radius_m;
    if (config.experiment == ExperimentKind::Ccdf) scenario["density_" + suffix] = s.density;
    j["scenario"] = scenario;
    j["trials"] = config.trials;
    j["engine"] = {{"far_field_tolerance", config.engine.far_field_tolerance},
                   {"min_exact_points", config.engine.min_exact_points}};
  }
  if (needs_density_grid(config.experiment))
    j["densities"] = {{"values_" + suffix, config.densities}};
  if (config.experiment == ExperimentKind::GridExample)
    j["grid"] = {{"alpha", config.grid.alpha},
                 {"half_edges_m", config.grid.half_edges_m},
                 {"noise_term", config.grid.noise_term}};
  if (config.experiment == ExperimentKind::RegionsTable)
    j["regions"] = {{"fluctuation_distance_m", config.regions.fluctuation_distance_m},
                    {"receive_height_m", config.regions.receive_height_m}};
  if (config.experiment == ExperimentKind::ScalingExponent && config.scaling.tail_min_density)
    j["scaling"] = {{"tail_min_density_" + suffix, *config.scaling.tail_min_density}};
  return j;
}

std::uint64_t config_fingerprint(const RunConfig& config) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : resolved_config(config).dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace densify
