"""Whale Optimization Algorithm with an instrumentation hook per iteration.

The update rules follow the standard WOA formulation: agents either encircle
the best-so-far solution, trace a logarithmic spiral around it, or migrate
toward a randomly chosen agent, with the branch picked per agent from the
random quantities (p, A). The control coefficient `a` decays linearly from
2 to 0 over the run and bounds the magnitude of A.

Randomness contract (required for reproducing a run from its seed): each
agent update consumes, in order, the uniforms r1, r2, p, l-source, plus one
bounded integer draw for the partner index if and only if the exploration
branch fires. The spiral parameter l maps its uniform source u to 2u - 1.
Noisy objectives consume a dedicated stream derived from the run seed so
optimizer trajectories stay aligned across objective functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import (
    Agent,
    ObjectiveFunction,
    Population,
    RngStream,
    clamp,
    init_population,
)

__all__ = [
    "WoaCoefficients",
    "IterationHook",
    "RunResult",
    "coefficient_a",
    "sample_coefficients",
    "encircle_update",
    "spiral_update",
    "explore_update",
    "woa_step",
    "run",
    "derive_noise_seed",
]

#: Hook signature: (iteration index, read-only (n, D) position matrix,
#: best fitness after the iteration's elitist refresh).
IterationHook = Callable[[int, np.ndarray, float], None]

# XOR mask separating the objective-noise stream from the optimizer stream.
_NOISE_SEED_MASK = 0xD1B54A32D192ED03
_SPIRAL_SHAPE_B = 1.0


def derive_noise_seed(seed: int) -> int:
    """Seed for the objective-noise stream belonging to optimizer seed `seed`."""
    return (int(seed) ^ _NOISE_SEED_MASK) & 0xFFFFFFFFFFFFFFFF


@dataclass
class WoaCoefficients:
    """Per-update control quantities.

    A and C steer the encircling/exploration moves, p selects between the
    spiral and encircling families, l parametrizes the spiral, and b fixes
    the spiral shape. r1 and r2 are the raw uniforms behind A and C. In the
    default scalar mode A, C, r1, r2 are floats; in per-coordinate mode they
    are vectors of the search dimension.
    """

    a: float
    A: float | np.ndarray
    C: float | np.ndarray
    p: float
    l: float
    r1: float | np.ndarray
    r2: float | np.ndarray
    b: float = _SPIRAL_SHAPE_B


def coefficient_a(t: int, T: int) -> float:
    """Linear schedule 2(1 - t/T): 2 at the start of a run, 0 at the end."""
    if T < 1:
        raise ValueError(f"max iterations must be at least 1, got {T}")
    if t < 0 or t > T:
        raise ValueError(f"iteration {t} outside [0, {T}]")
    return 2.0 * (1.0 - t / T)


def sample_coefficients(a: float, rng: RngStream, dims: int | None = None) -> WoaCoefficients:
    """Draw one update's worth of control quantities.

    A = 2a*r1 - a lies in [-a, a]; C = 2*r2 lies in [0, 2). With `dims` set,
    r1 and r2 become per-coordinate vectors (A and C follow); p and l stay
    scalar either way.
    """
    if not 0.0 <= a <= 2.0:
        raise ValueError(f"schedule value a={a} outside [0, 2]")
    if dims is None:
        r1, r2, p, u = rng.uniform(4)
    else:
        r1 = rng.uniform(dims)
        r2 = rng.uniform(dims)
        p = rng.uniform()
        u = rng.uniform()
    A = 2.0 * a * r1 - a
    C = 2.0 * r2
    l = 2.0 * u - 1.0
    return WoaCoefficients(a=a, A=A, C=C, p=float(p), l=float(l), r1=r1, r2=r2)


def _check_same_length(x: np.ndarray, other: np.ndarray, role: str) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    other = np.asarray(other, dtype=float)
    if x.shape != other.shape:
        raise ValueError(f"position and {role} differ in length: {x.shape} vs {other.shape}")
    return x, other


def encircle_update(
    x: np.ndarray, x_best: np.ndarray, A: float | np.ndarray, C: float | np.ndarray
) -> np.ndarray:
    """Shrinking encirclement of the best agent: x_best - A*|C*x_best - x|."""
    x, x_best = _check_same_length(x, x_best, "best position")
    d = np.abs(C * x_best - x)
    return x_best - A * d


def spiral_update(x: np.ndarray, x_best: np.ndarray, l: float, b: float = _SPIRAL_SHAPE_B) -> np.ndarray:
    """Logarithmic spiral toward the best agent.

    Per coordinate: |x_best - x| * exp(b*l) * cos(2*pi*l) + x_best.
    """
    x, x_best = _check_same_length(x, x_best, "best position")
    d = np.abs(x_best - x)
    return d * np.exp(b * l) * np.cos(2.0 * np.pi * l) + x_best


def explore_update(
    x: np.ndarray, x_rand: np.ndarray, A: float | np.ndarray, C: float | np.ndarray
) -> np.ndarray:
    """Migration toward a random agent: x_rand - A*|C*x_rand - x|."""
    x, x_rand = _check_same_length(x, x_rand, "random position")
    d = np.abs(C * x_rand - x)
    return x_rand - A * d


def _wants_exploration(A: float | np.ndarray) -> bool:
    # Scalar mode: |A| >= 1. Per-coordinate mode: the A vector leaves the
    # [-1, 1] box, so exactly one branch still fires per agent update.
    return bool(np.max(np.abs(A)) >= 1.0)


def woa_step(
    f: ObjectiveFunction,
    pop: Population,
    rng: RngStream,
    hook: IterationHook | None = None,
    noise_rng: RngStream | None = None,
    vector_coefficients: bool = False,
    branch_counts: dict[str, int] | None = None,
) -> Population:
    """Advance the population by one iteration, in place.

    Agents move in index order. Per agent: draw coefficients at the current
    schedule value; spiral toward the best when p >= 0.5; otherwise encircle
    the best when |A| < 1, else explore toward a uniformly chosen agent
    (drawn from this iteration's pre-update positions, possibly itself).
    Positions are clamped to the bounds, all fitnesses re-evaluated, the
    elitist best refreshed once, the iteration counter incremented, and the
    hook (if any) invoked with the completed iteration's state.
    """
    if pop.iteration >= pop.max_iterations:
        raise RuntimeError(
            f"run already completed: iteration {pop.iteration} of {pop.max_iterations}"
        )
    n = pop.size
    bounds = f.bounds
    a = coefficient_a(pop.iteration, pop.max_iterations)
    best_position = pop.best.position.copy()
    before = pop.positions()
    dims = bounds.dims if vector_coefficients else None

    for i, agent in enumerate(pop.agents):
        coeffs = sample_coefficients(a, rng, dims)
        if coeffs.p >= 0.5:
            moved = spiral_update(agent.position, best_position, coeffs.l, coeffs.b)
            branch = "spiral"
        elif not _wants_exploration(coeffs.A):
            moved = encircle_update(agent.position, best_position, coeffs.A, coeffs.C)
            branch = "encircle"
        else:
            partner = rng.integer(n)
            moved = explore_update(agent.position, before[partner], coeffs.A, coeffs.C)
            branch = "explore"
        agent.position = clamp(moved, bounds)
        if branch_counts is not None:
            branch_counts[branch] = branch_counts.get(branch, 0) + 1

    fitnesses = f.evaluate_many(
        pop.positions(), noise_rng if noise_rng is not None else rng
    )
    for agent, fitness in zip(pop.agents, fitnesses):
        agent.fitness = float(fitness)
    pop.refresh_best()
    pop.iteration += 1
    if hook is not None:
        view = pop.positions()
        view.setflags(write=False)
        hook(pop.iteration, view, pop.best.fitness)
    return pop


_BRANCHES = ("spiral", "encircle", "explore")


@dataclass
class RunResult:
    """Outcome of one seeded WOA run."""

    function: str
    seed: int
    agents: int
    iterations: int
    best: Agent
    history: np.ndarray  # best fitness after each iteration, length T
    branch_history: np.ndarray  # (T, 3) counts in (spiral, encircle, explore) order
    trace: list[np.ndarray] | None = None  # (n, D) positions after each iteration
    branch_order: tuple[str, ...] = field(default=_BRANCHES, repr=False)

    def branch_totals(self) -> dict[str, int]:
        totals = self.branch_history.sum(axis=0)
        return {name: int(totals[k]) for k, name in enumerate(self.branch_order)}


def run(
    f: ObjectiveFunction,
    n: int,
    T: int,
    seed: int,
    hook: IterationHook | None = None,
    record_trace: bool = False,
    vector_coefficients: bool = False,
) -> RunResult:
    """Run WOA on `f` with `n` agents for `T` iterations from `seed`.

    The hook fires exactly T times, once after each completed iteration.
    With `record_trace`, the post-update position matrix of every iteration
    is kept (enough to recompute any diversity quantity offline).
    """
    if n < 2:
        raise ValueError(f"need at least 2 agents, got {n}")
    if T < 1:
        raise ValueError(f"need at least 1 iteration, got {T}")
    rng = RngStream(seed)
    noise_rng = RngStream(derive_noise_seed(seed)) if f.noisy else None
    pop = init_population(f, n, rng, noise_rng=noise_rng, max_iterations=T)
    history = np.empty(T, dtype=float)
    branch_history = np.zeros((T, len(_BRANCHES)), dtype=int)
    trace: list[np.ndarray] | None = [] if record_trace else None

    for t in range(T):
        counts: dict[str, int] = {}
        woa_step(
            f,
            pop,
            rng,
            hook=hook,
            noise_rng=noise_rng,
            vector_coefficients=vector_coefficients,
            branch_counts=counts,
        )
        history[t] = pop.best.fitness
        branch_history[t] = [counts.get(name, 0) for name in _BRANCHES]
        if trace is not None:
            trace.append(pop.positions())

    return RunResult(
        function=f.name,
        seed=int(seed),
        agents=n,
        iterations=T,
        best=pop.best.copy(),
        history=history,
        branch_history=branch_history,
        trace=trace,
    )
