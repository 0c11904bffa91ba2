"""Dimension-wise population diversity and exploration/exploitation split.

Diversity of a swarm snapshot is measured per dimension as the mean absolute
deviation of the agents from the population median of that dimension, then
averaged over dimensions. Normalizing each iteration's diversity by the
run-wide maximum yields the exploration percentage (XPL%); its complement is
the exploitation percentage (XPT%):

    div_j = mean_i |median(column j) - positions[i][j]|
    div   = mean_j div_j
    xpl%  = 100 * div / div_max        xpt% = 100 * |div - div_max| / div_max

The absolute value in div_j is applied per term; without it, deviations
around the median cancel and the measure loses meaning. Because div_max is a
whole-run quantity, percentages are computed retrospectively once a run's
diversity series is complete. Works both as an in-run iteration hook
(DiversityRecorder) and as an offline analyzer of recorded traces from any
optimizer (analyze_trace).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DiversitySnapshot",
    "BalanceSeries",
    "DiversityRecorder",
    "median",
    "dimension_diversity",
    "swarm_diversity",
    "balance_from_series",
    "analyze_trace",
]


@dataclass(frozen=True)
class DiversitySnapshot:
    """Diversity of one iteration: the per-dimension vector and its mean."""

    iteration: int
    div_j: np.ndarray
    div: float


@dataclass(frozen=True)
class BalanceSeries:
    """Per-iteration and aggregate exploration/exploitation percentages.

    xpl_series[t] + xpt_series[t] == 100 whenever div_max > 0; the aggregates
    are plain means over iterations. A run whose population is identical at
    every iteration has div_max == 0 and is scored as pure exploitation
    (xpl 0, xpt 100): zero diversity is total convergence, and the rule
    avoids dividing by zero.
    """

    div_series: tuple[DiversitySnapshot, ...]
    div_max: float
    xpl_series: np.ndarray
    xpt_series: np.ndarray
    xpl_aggregate: float
    xpt_aggregate: float

    def __len__(self) -> int:
        return len(self.div_series)


def median(values: Sequence[float] | np.ndarray) -> float:
    """Middle order statistic; the mean of the two middle ones for even length."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("median of an empty vector is undefined")
    return float(np.median(values))


def _as_position_matrix(positions: np.ndarray) -> np.ndarray:
    positions = np.asarray(positions, dtype=float)
    if positions.ndim != 2:
        raise ValueError(f"expected an (n, D) position matrix, got shape {positions.shape}")
    if positions.shape[0] < 2:
        raise ValueError("diversity needs at least 2 agents")
    return positions


def dimension_diversity(positions: np.ndarray, j: int) -> float:
    """Mean absolute deviation from the population median in dimension `j`."""
    positions = _as_position_matrix(positions)
    if not 0 <= j < positions.shape[1]:
        raise ValueError(f"dimension {j} out of range for D={positions.shape[1]}")
    column = positions[:, j]
    return float(np.mean(np.abs(np.median(column) - column)))


def swarm_diversity(positions: np.ndarray, iteration: int = 0) -> DiversitySnapshot:
    """Per-dimension diversity of a snapshot and its mean over dimensions."""
    positions = _as_position_matrix(positions)
    medians = np.median(positions, axis=0)
    div_j = np.mean(np.abs(medians - positions), axis=0)
    return DiversitySnapshot(iteration=int(iteration), div_j=div_j, div=float(np.mean(div_j)))


def balance_from_series(div_series: Iterable[DiversitySnapshot]) -> BalanceSeries:
    """Turn a run's diversity series into its exploration/exploitation split."""
    snapshots = tuple(div_series)
    if not snapshots:
        raise ValueError("diversity series is empty")
    divs = np.array([snapshot.div for snapshot in snapshots], dtype=float)
    div_max = float(divs.max())
    if div_max <= 0.0:
        xpl = np.zeros_like(divs)
        xpt = np.full_like(divs, 100.0)
    else:
        # ratio first: div/div_max is exactly 1.0 at the peak and never above
        xpl = 100.0 * (divs / div_max)
        xpt = 100.0 * (np.abs(divs - div_max) / div_max)
    return BalanceSeries(
        div_series=snapshots,
        div_max=div_max,
        xpl_series=xpl,
        xpt_series=xpt,
        xpl_aggregate=float(xpl.mean()),
        xpt_aggregate=float(xpt.mean()),
    )


def analyze_trace(
    matrices: Sequence[np.ndarray], iterations: Sequence[int] | None = None
) -> BalanceSeries:
    """Offline balance analysis of an iteration-ordered sequence of snapshots.

    Every matrix must share the same (n, D) shape with n >= 2; a ragged trace
    raises with the offending iteration named.
    """
    matrices = list(matrices)
    if not matrices:
        raise ValueError("trace is empty")
    if iterations is None:
        iterations = list(range(1, len(matrices) + 1))
    elif len(iterations) != len(matrices):
        raise ValueError(
            f"{len(iterations)} iteration indices for {len(matrices)} snapshots"
        )
    first = np.asarray(matrices[0], dtype=float)
    snapshots = []
    for index, raw in zip(iterations, matrices):
        matrix = np.asarray(raw, dtype=float)
        if matrix.ndim != 2 or matrix.shape != first.shape:
            raise ValueError(
                f"iteration {index}: expected a {first.shape[0]}x{first.shape[1]} "
                f"position matrix, got shape {tuple(matrix.shape)}"
            )
        snapshots.append(swarm_diversity(matrix, iteration=index))
    return balance_from_series(snapshots)


class DiversityRecorder:
    """Iteration hook that snapshots swarm diversity as a run progresses."""

    def __init__(self):
        self.snapshots: list[DiversitySnapshot] = []

    def __call__(self, iteration: int, positions: np.ndarray, best_fitness: float) -> None:
        self.snapshots.append(swarm_diversity(positions, iteration=iteration))

    def balance(self) -> BalanceSeries:
        return balance_from_series(self.snapshots)
