"""Gravitational search and cooperative-coevolution optimizers."""

from ccgsa._ccgsa import (
    ConfigError,
    GroupingReport,
    GsaParams,
    GsaResult,
    NumericError,
    Objective,
    RunResult,
    StructuredProblem,
    compute_masses,
    custom_objective,
    detect_interaction,
    gravitational_constant,
    group,
    kbest_size,
    make_classical,
    make_structured,
    run_ccgsa_dg,
    run_gsa,
)

__all__ = [
    "ConfigError",
    "GroupingReport",
    "GsaParams",
    "GsaResult",
    "NumericError",
    "Objective",
    "RunResult",
    "StructuredProblem",
    "compute_masses",
    "custom_objective",
    "detect_interaction",
    "gravitational_constant",
    "group",
    "kbest_size",
    "make_classical",
    "make_structured",
    "run_ccgsa_dg",
    "run_gsa",
]
