"""Whale Optimization Algorithm with per-iteration diversity instrumentation.

The package bundles four layers:

- core: bounds, populations, objective-function contract, seeded RNG stream
- woa: the optimizer's update rules and instrumented main loop
- diversity: dimension-wise diversity and exploration/exploitation split
- benchmarks + harness: the 23 classical and 10 CEC2019 test functions and
  an experiment runner that reproduces reference balance percentages
"""

from .core import Agent, Bounds, ObjectiveFunction, Population, RngStream, clamp, init_population
from .diversity import (
    BalanceSeries,
    DiversityRecorder,
    DiversitySnapshot,
    analyze_trace,
    balance_from_series,
    dimension_diversity,
    median,
    swarm_diversity,
)
from .woa import (
    RunResult,
    WoaCoefficients,
    coefficient_a,
    encircle_update,
    explore_update,
    run,
    sample_coefficients,
    spiral_update,
    woa_step,
)

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "Bounds",
    "ObjectiveFunction",
    "Population",
    "RngStream",
    "clamp",
    "init_population",
    "BalanceSeries",
    "DiversityRecorder",
    "DiversitySnapshot",
    "analyze_trace",
    "balance_from_series",
    "dimension_diversity",
    "median",
    "swarm_diversity",
    "RunResult",
    "WoaCoefficients",
    "coefficient_a",
    "encircle_update",
    "explore_update",
    "run",
    "sample_coefficients",
    "spiral_update",
    "woa_step",
    "__version__",
]
