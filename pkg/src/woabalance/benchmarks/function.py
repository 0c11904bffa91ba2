"""Uniform wrapper exposing a benchmark definition as an ObjectiveFunction."""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..core import Bounds, ObjectiveFunction, RngStream

__all__ = ["BenchmarkFunction"]

Family = str  # "unimodal" | "multimodal" | "fixed-dimension multimodal" | "composite"


class BenchmarkFunction(ObjectiveFunction):
    """A registered test function: metadata plus a vectorized evaluator.

    `batch` maps an (m, D) float matrix to m objective values. Noisy
    functions additionally receive one uniform [0, 1) draw per row from the
    caller's RngStream, added to the batch result, so batched and row-by-row
    evaluation consume the stream identically.
    """

    def __init__(
        self,
        function_id: str,
        family: Family,
        bounds: Bounds,
        batch: Callable[[np.ndarray], np.ndarray],
        known_optimum: float | None = None,
        optimum_position: np.ndarray | None = None,
        noisy: bool = False,
    ):
        self.function_id = function_id
        self.name = function_id
        self.family = family
        self.bounds = bounds
        self._batch = batch
        self.known_optimum = known_optimum
        self.optimum_position = (
            None if optimum_position is None else np.asarray(optimum_position, dtype=float)
        )
        self.noisy = noisy

    @property
    def default_dims(self) -> int:
        return self.bounds.dims

    def _validated(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        if xs.ndim != 2 or xs.shape[1] != self.bounds.dims:
            raise ValueError(
                f"{self.function_id} expects points of dimension {self.bounds.dims}, "
                f"got array of shape {xs.shape}"
            )
        return xs

    def evaluate_many(self, xs: np.ndarray, rng: RngStream | None = None) -> np.ndarray:
        xs = self._validated(xs)
        values = np.asarray(self._batch(xs), dtype=float)
        if self.noisy:
            if rng is None:
                raise ValueError(f"{self.function_id} is noisy and requires an rng stream")
            values = values + rng.uniform(xs.shape[0])
        return values

    def evaluate(self, x: np.ndarray, rng: RngStream | None = None) -> float:
        x = np.asarray(x, dtype=float)
        if x.ndim != 1:
            raise ValueError(f"expected a 1-D point, got shape {x.shape}")
        return float(self.evaluate_many(x[None, :], rng)[0])

    def describe(self) -> str:
        low = self.bounds.lower[0]
        high = self.bounds.upper[0]
        uniform_box = bool(
            np.all(self.bounds.lower == low) and np.all(self.bounds.upper == high)
        )
        box = f"[{low:g}, {high:g}]" if uniform_box else "per-dimension"
        return f"{self.function_id}\t{self.family}\tD={self.default_dims}\t{box}"

    def __repr__(self) -> str:  # pragma: no cover
        return f"BenchmarkFunction({self.function_id}, {self.family}, D={self.default_dims})"
