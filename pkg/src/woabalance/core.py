"""Shared domain types for bounded black-box minimization.

Everything downstream (the optimizer, the diversity instrumentation, the
benchmark suites and the experiment harness) works in terms of the types
defined here: box bounds, agents, populations, objective functions and a
reproducible random-number stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Bounds",
    "Agent",
    "Population",
    "ObjectiveFunction",
    "SimpleObjective",
    "RngStream",
    "init_population",
    "clamp",
]


class RngStream:
    """Reproducible source of uniform random draws.

    A thin wrapper around numpy's PCG64 bit generator. PCG64 output is
    versioned and platform independent, so an identical seed yields an
    identical draw sequence everywhere. Array draws consume the stream
    exactly like the same number of scalar draws, which keeps batched and
    agent-by-agent code on the same sequence.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def uniform(self, size: int | tuple[int, ...] | None = None):
        """Uniform draw(s) on [0, 1): a float for size=None, else an array."""
        return self._gen.random(size)

    def integer(self, upper: int) -> int:
        """Uniform integer on [0, upper)."""
        return int(self._gen.integers(upper))

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed})"


@dataclass(frozen=True)
class Bounds:
    """Per-dimension box bounds of the search space."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        if lower.ndim != 1 or upper.ndim != 1:
            raise ValueError("bounds must be 1-D vectors")
        if lower.shape != upper.shape:
            raise ValueError(
                f"lower and upper bounds differ in length: {lower.shape[0]} vs {upper.shape[0]}"
            )
        if lower.shape[0] == 0:
            raise ValueError("bounds must cover at least one dimension")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def cube(cls, lower: float, upper: float, dims: int) -> "Bounds":
        """Identical [lower, upper] interval in every one of `dims` dimensions."""
        return cls(np.full(dims, float(lower)), np.full(dims, float(upper)))

    @property
    def dims(self) -> int:
        return self.lower.shape[0]

    @property
    def span(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, position: np.ndarray) -> bool:
        position = np.asarray(position, dtype=float)
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))


def clamp(position: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Coordinate-wise projection of `position` onto the bounds box.

    Feasible inputs come back value-identical; infeasible coordinates are
    replaced by the nearest bound.
    """
    position = np.asarray(position, dtype=float)
    if position.shape != (bounds.dims,):
        raise ValueError(
            f"position has length {position.shape}, bounds expect ({bounds.dims},)"
        )
    return np.clip(position, bounds.lower, bounds.upper)


@dataclass
class Agent:
    """One candidate solution: a position and its objective value."""

    position: np.ndarray
    fitness: float

    def copy(self) -> "Agent":
        return Agent(self.position.copy(), self.fitness)


@dataclass
class Population:
    """The swarm state owned by a single optimization run.

    `best` is an elitist copy: its fitness never exceeds the fitness of any
    current agent once initialized, and it is non-increasing over time.
    """

    agents: list[Agent]
    best: Agent
    iteration: int = 0
    max_iterations: int = 0

    @property
    def size(self) -> int:
        return len(self.agents)

    def positions(self) -> np.ndarray:
        """Current agent positions as an (n, D) matrix (fresh copy)."""
        return np.array([agent.position for agent in self.agents], dtype=float)

    def fitnesses(self) -> np.ndarray:
        return np.array([agent.fitness for agent in self.agents], dtype=float)

    def refresh_best(self) -> None:
        """Adopt the best current agent if it improves on the stored best.

        Ties keep the incumbent; among current agents, the lowest index wins
        (np.argmin returns the first minimum).
        """
        idx = int(np.argmin(self.fitnesses()))
        if self.agents[idx].fitness < self.best.fitness:
            self.best = self.agents[idx].copy()


class ObjectiveFunction:
    """Scalar minimization target over a box-bounded domain.

    Subclasses set `name`, `bounds` and implement `evaluate`. Evaluation is
    deterministic for a fixed input unless `noisy` is True, in which case the
    caller supplies an RngStream that the function consumes one draw per
    evaluation (in row order for batched calls).

    `known_optimum` is reporting metadata only; the optimizer never sees it.
    """

    name: str
    bounds: Bounds
    noisy: bool = False
    known_optimum: float | None = None

    def evaluate(self, x: np.ndarray, rng: RngStream | None = None) -> float:
        raise NotImplementedError

    def evaluate_many(self, xs: np.ndarray, rng: RngStream | None = None) -> np.ndarray:
        """Evaluate each row of `xs`. Default is a row loop; vectorized
        subclasses must consume any noise stream in the same row order."""
        return np.array([self.evaluate(x, rng) for x in np.asarray(xs, dtype=float)])

    @property
    def dims(self) -> int:
        return self.bounds.dims


class SimpleObjective(ObjectiveFunction):
    """Adapter turning a plain callable into an ObjectiveFunction."""

    def __init__(self, name, bounds, fn, known_optimum=None):
        self.name = name
        self.bounds = bounds
        self._fn = fn
        self.known_optimum = known_optimum

    def evaluate(self, x, rng=None):
        return float(self._fn(np.asarray(x, dtype=float)))


def init_population(
    f: ObjectiveFunction,
    n: int,
    rng: RngStream,
    noise_rng: RngStream | None = None,
    max_iterations: int = 0,
) -> Population:
    """Draw `n` agents uniformly inside the bounds of `f` and evaluate them.

    Draw order: one uniform per coordinate, agent by agent (agent 0 dim 0,
    agent 0 dim 1, ..., agent 1 dim 0, ...). `noise_rng` feeds noisy
    objectives; it defaults to `rng` so deterministic functions see a single
    stream.
    """
    if n < 2:
        raise ValueError(f"population size must be at least 2, got {n}")
    bounds = f.bounds
    unit = rng.uniform((n, bounds.dims))
    positions = bounds.lower + bounds.span * unit
    fitnesses = f.evaluate_many(positions, noise_rng if noise_rng is not None else rng)
    agents = [Agent(positions[i].copy(), float(fitnesses[i])) for i in range(n)]
    best_idx = int(np.argmin(fitnesses))
    best = agents[best_idx].copy()
    return Population(agents=agents, best=best, iteration=0, max_iterations=max_iterations)
