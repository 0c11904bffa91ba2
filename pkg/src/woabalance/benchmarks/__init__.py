"""Benchmark function registry: 23 classical functions plus CEC2019.

Functions are addressed by id (F1..F23, CEC01..CEC10). The registry builds
every function at its default dimension; classical scalable functions can be
instantiated at other dimensions through make_classical.
"""

from __future__ import annotations

import numpy as np

from ..core import RngStream
from .cec2019 import (
    CEC_IDS,
    CecData,
    CecDataError,
    cec_registry,
    data_directory,
    load_cec_data,
    make_cec,
    required_files,
)
from .classical import CLASSICAL_IDS, classical_registry, make_classical
from .function import BenchmarkFunction

__all__ = [
    "ALL_IDS",
    "CLASSICAL_IDS",
    "CEC_IDS",
    "BenchmarkFunction",
    "CecData",
    "CecDataError",
    "registry",
    "get",
    "evaluate",
    "load_cec_data",
    "data_directory",
    "required_files",
    "make_classical",
    "make_cec",
]

ALL_IDS = CLASSICAL_IDS + CEC_IDS


def registry(data: CecData | None = None) -> list[BenchmarkFunction]:
    """All 33 benchmark functions in id order."""
    return classical_registry() + cec_registry(data)


def get(function_id: str, data: CecData | None = None) -> BenchmarkFunction:
    """Resolve one function id to a ready-to-evaluate BenchmarkFunction."""
    if function_id in CLASSICAL_IDS:
        return make_classical(function_id)
    if function_id in CEC_IDS:
        return make_cec(function_id, data)
    raise KeyError(f"unknown function id: {function_id!r}")


def evaluate(function_id: str, x: np.ndarray, rng: RngStream | None = None) -> float:
    """Evaluate a registered function at one point."""
    return get(function_id).evaluate(x, rng)
