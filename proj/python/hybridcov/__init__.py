"""Uplink coverage of hybrid satellite-terrestrial networks.

Densities are per m^2 and angles in radians unless a function says otherwise;
``Scenario.get``/``Scenario.set`` use each key's default unit (see
``Scenario.default_unit``).
"""

from ._hybridcov import (
    ConfigError,
    CoverageModel,
    InfeasibleError,
    MCEstimate,
    NumericalError,
    Scenario,
    __version__,
    default_planes,
    hybrid_coverage,
    operating_curve,
    required_bs_density,
    required_satellites,
    run_cli,
    sample_uniform_sphere,
    sat_coverage,
    simulate_hybrid,
    simulate_sat_link,
    simulate_terr_link,
    terr_coverage,
    walker,
)

__all__ = [
    "ConfigError",
    "CoverageModel",
    "InfeasibleError",
    "MCEstimate",
    "NumericalError",
    "Scenario",
    "__version__",
    "default_planes",
    "hybrid_coverage",
    "operating_curve",
    "required_bs_density",
    "required_satellites",
    "run_cli",
    "sample_uniform_sphere",
    "sat_coverage",
    "simulate_hybrid",
    "simulate_sat_link",
    "simulate_terr_link",
    "terr_coverage",
    "walker",
]
