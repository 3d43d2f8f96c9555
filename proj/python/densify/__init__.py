"""Coverage and potential-throughput scaling of dense downlink networks."""

from ._densify import (
    ConfigError,
    CoverageEstimate,
    CriticalDensityResult,
    DomainError,
    EngineOptions,
    InsufficientData,
    InvalidModel,
    InvalidParameter,
    MissingCornerDistance,
    NetworkScenario,
    PathLossModel,
    ScalingFit,
    SweepResult,
    SweepRow,
    estimate_coverage,
    estimate_sir_ccdf,
    find_critical_density,
    fit_scaling_exponent,
    grid_corner_sir,
    log_spaced_densities,
    normalized_critical_density,
    potential_throughput,
    run_config,
    run_density_sweep,
    sample_sinr,
    small_scale_boundary,
    wavelength_from_frequency,
)

__version__ = "0.1.0"
