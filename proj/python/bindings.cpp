#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "densify/analysis.hpp"
#include "densify/config.hpp"
#include "densify/error.hpp"
#include "densify/experiments.hpp"
#include "densify/montecarlo.hpp"
#include "densify/propagation.hpp"
#include "densify/sinr.hpp"

namespace py = pybind11;
using namespace densify;

namespace {

NetworkScenario make_scenario(const std::string& dimension, double density,
                              const std::vector<double>& exponents,
                              const std::vector<double>& breakpoints_m, const std::string& fading,
                              double nakagami_m, std::optional<double> snr_at_corner_db,
                              double noise_w, double transmit_power_w,
                              std::vector<double> thresholds, std::optional<double> window_m) {
  NetworkScenario s;
  s.dimension = parse_dimension(dimension);
  s.density = density;
  s.pathloss = PathLossModel(exponents, breakpoints_m);
  if (fading == "none")
    s.fading = FadingModel::none();
  else if (fading == "rayleigh")
    s.fading = FadingModel::rayleigh();
  else if (fading == "nakagami")
    s.fading = FadingModel::nakagami(nakagami_m);
  else
    throw InvalidParameter("fading must be none, rayleigh or nakagami");
  if (snr_at_corner_db)
    s.noise = SnrAtCorner{*snr_at_corner_db};
  else
    s.noise = AbsoluteNoise{noise_w};
  s.transmit_power_w = transmit_power_w;
  s.thresholds = std::move(thresholds);
  s.window_radius_m = window_m;
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_densify, m) {
  m.doc() = "Coverage and potential-throughput scaling of dense downlink networks";

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<InvalidModel>(m, "InvalidModel", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<MissingCornerDistance>(m, "MissingCornerDistance", PyExc_ValueError);
  py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<PathLossModel>(m, "PathLossModel")
      .def(py::init<std::vector<double>, std::vector<double>, double>(), py::arg("exponents"),
           py::arg("breakpoints_m") = std::vector<double>{}, py::arg("reference_gain") = 1.0)
      .def_static("single_slope", &PathLossModel::single_slope, py::arg("exponent"),
                  py::arg("reference_gain") = 1.0)
      .def_static("dual_slope", &PathLossModel::dual_slope, py::arg("near_exponent"),
                  py::arg("far_exponent"), py::arg("corner_m"), py::arg("reference_gain") = 1.0)
      .def_property_readonly("exponents", &PathLossModel::exponents)
      .def_property_readonly("breakpoints", &PathLossModel::breakpoints)
      .def_property_readonly("segment_gains", &PathLossModel::segment_gains)
      .def("gain", &PathLossModel::gain, py::arg("d"));

  m.def("small_scale_boundary",
        [](double wavelength_m, double transmit_height_m, double fluctuation_distance_m) {
          return small_scale_boundary({wavelength_m, transmit_height_m, 1.0, fluctuation_distance_m});
        },
        py::arg("wavelength_m"), py::arg("transmit_height_m"),
        py::arg("fluctuation_distance_m") = 0.2);
  m.def("wavelength_from_frequency", &wavelength_from_frequency, py::arg("frequency_hz"));
  m.def("grid_corner_sir", &grid_corner_sir, py::arg("alpha"), py::arg("noise_term") = 0.0);

  py::class_<CoverageEstimate>(m, "CoverageEstimate")
      .def_readonly("probability", &CoverageEstimate::probability)
      .def_readonly("ci_halfwidth", &CoverageEstimate::ci_halfwidth)
      .def_readonly("ci_lower", &CoverageEstimate::ci_lower)
      .def_readonly("ci_upper", &CoverageEstimate::ci_upper)
      .def_readonly("covered", &CoverageEstimate::covered)
      .def_readonly("trials", &CoverageEstimate::trials)
      .def_readonly("seed", &CoverageEstimate::seed)
      .def("__repr__", [](const CoverageEstimate& e) {
        return "CoverageEstimate(" + std::to_string(e.probability) + " +/- " +
               std::to_string(e.ci_halfwidth) + ", trials=" + std::to_string(e.trials) + ")";
      });

  py::class_<NetworkScenario>(m, "NetworkScenario")
      .def(py::init(&make_scenario), py::arg("dimension") = "2d", py::arg("density") = 0.0,
           py::arg("exponents") = std::vector<double>{4.0},
           py::arg("breakpoints_m") = std::vector<double>{}, py::arg("fading") = "rayleigh",
           py::arg("nakagami_m") = 1.0, py::arg("snr_at_corner_db") = py::none(),
           py::arg("noise_w") = 0.0, py::arg("transmit_power_w") = 1.0,
           py::arg("thresholds") = std::vector<double>{0.5, 5.0},
           py::arg("window_radius_m") = py::none())
      .def_readwrite("density", &NetworkScenario::density)
      .def_readwrite("thresholds", &NetworkScenario::thresholds)
      .def_property_readonly("noise_power_w", &NetworkScenario::noise_power_w);

  py::class_<EngineOptions>(m, "EngineOptions")
      .def(py::init([](unsigned threads, double tolerance, std::size_t min_exact) {
             return EngineOptions{threads, tolerance, min_exact};
           }),
           py::arg("threads") = 0, py::arg("far_field_tolerance") = EngineOptions{}.far_field_tolerance,
           py::arg("min_exact_points") = EngineOptions{}.min_exact_points)
      .def_readwrite("threads", &EngineOptions::threads)
      .def_readwrite("far_field_tolerance", &EngineOptions::far_field_tolerance)
      .def_readwrite("min_exact_points", &EngineOptions::min_exact_points);

  m.def("estimate_coverage", &estimate_coverage, py::arg("scenario"), py::arg("threshold"),
        py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("options") = EngineOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_sir_ccdf",
        [](const NetworkScenario& s, std::vector<double> thresholds, std::uint64_t trials,
           std::uint64_t seed, const EngineOptions& options) {
          return estimate_sir_ccdf(s, thresholds, trials, seed, options);
        },
        py::arg("scenario"), py::arg("thresholds"), py::arg("trials") = 100000,
        py::arg("seed") = 1, py::arg("options") = EngineOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("sample_sinr", &sample_sinr, py::arg("scenario"), py::arg("trials"), py::arg("seed") = 1,
        py::arg("options") = EngineOptions{}, py::call_guard<py::gil_scoped_release>());
  m.def("potential_throughput", &potential_throughput, py::arg("density"), py::arg("threshold"),
        py::arg("coverage"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("density", &SweepRow::density)
      .def_readonly("coverage", &SweepRow::coverage)
      .def_readonly("throughput", &SweepRow::throughput);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("seed", &SweepResult::seed)
      .def_property_readonly("thresholds", &SweepResult::thresholds)
      .def("coverage_peak_density", &SweepResult::coverage_peak_density, py::arg("t") = 0);
  m.def("log_spaced_densities", &log_spaced_densities, py::arg("lo"), py::arg("hi"),
        py::arg("per_decade") = 8);
  m.def("run_density_sweep",
        [](const NetworkScenario& s, std::vector<double> densities, std::uint64_t trials,
           std::uint64_t seed, const EngineOptions& options) {
          return run_density_sweep(s, densities, trials, seed, options);
        },
        py::arg("scenario"), py::arg("densities"), py::arg("trials") = 100000,
        py::arg("seed") = 1, py::arg("options") = EngineOptions{},
        py::call_guard<py::gil_scoped_release>());

  py::class_<CriticalDensityResult>(m, "CriticalDensityResult")
      .def_readonly("peak_found", &CriticalDensityResult::peak_found)
      .def_readonly("critical_density", &CriticalDensityResult::critical_density)
      .def_readonly("normalized_value", &CriticalDensityResult::normalized_value)
      .def_readonly("argmax_index", &CriticalDensityResult::argmax_index)
      .def_readonly("curvature", &CriticalDensityResult::curvature);
  m.def("find_critical_density",
        py::overload_cast<const SweepResult&, std::size_t>(&find_critical_density),
        py::arg("sweep"), py::arg("t") = 0);

  py::class_<ScalingFit>(m, "ScalingFit")
      .def_readonly("exponent", &ScalingFit::exponent)
      .def_readonly("standard_error", &ScalingFit::standard_error)
      .def_readonly("points", &ScalingFit::points);
  m.def("fit_scaling_exponent",
        [](std::vector<double> densities, std::vector<double> throughput) {
          return fit_scaling_exponent(densities, throughput);
        },
        py::arg("densities"), py::arg("throughput"));
  m.def("normalized_critical_density",
        [](double critical, double corner_m, const std::string& dimension) {
          const Dimension dim = parse_dimension(dimension);
          return normalized_critical_density({critical, density_unit_for(dim)}, corner_m, dim);
        },
        py::arg("critical_density"), py::arg("corner_m"), py::arg("dimension") = "2d");

  m.def("run_config",
        [](const std::string& text, std::optional<std::string> kind) {
          std::optional<ExperimentKind> parsed;
          if (kind) {
            parsed = parse_experiment_kind(*kind);
            if (!parsed) throw InvalidParameter("unknown experiment kind '" + *kind + "'");
          }
          const auto config = parse_config(text, parsed);
          py::gil_scoped_release release;
          return run_experiment(config).csv;
        },
        py::arg("config_json"), py::arg("experiment") = py::none(),
        "Run an experiment from JSON configuration text and return the CSV.");
}
