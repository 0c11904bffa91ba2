"""The ten CEC2019 (100-digit challenge) composite test functions.

CEC01-CEC03 (Chebyshev polynomial fitting, inverse Hilbert matrix,
Lennard-Jones cluster) are used in their plain form; CEC04-CEC10 are
shifted and rotated variants of classic multimodal functions. Every
function is biased so its global minimum value is exactly 1.0.

Shift vectors and rotation matrices live in whitespace-separated text files
under the data directory, one vector or matrix per file, following the
suite's conventional naming: shift_data_K.txt and M_K_D10.txt for function
number K in 4..10. The packaged data directory is used by default; any
directory with the same file layout can be substituted.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

import numpy as np

from ..core import Bounds
from .function import BenchmarkFunction

__all__ = [
    "CEC_IDS",
    "CecData",
    "CecDataError",
    "data_directory",
    "required_files",
    "load_cec_data",
    "make_cec",
    "cec_registry",
]

CEC_IDS = tuple(f"CEC{k:02d}" for k in range(1, 11))

_DIMS = {1: 9, 2: 16, 3: 18, **{k: 10 for k in range(4, 11)}}
_RANGES = {1: 8192.0, 2: 16384.0, 3: 4.0, **{k: 100.0 for k in range(4, 11)}}
# Input shrink rate applied before rotation, per shifted function.
_RATES = {4: 5.12 / 100, 5: 6.0, 6: 0.5 / 100, 7: 10.0, 8: 1.0, 9: 5.0 / 100, 10: 1.0}
_SHIFTED = tuple(range(4, 11))

_BIAS = 1.0  # every CEC2019 minimum equals 1.0

# Modified-Schwefel constants: per-dimension argmin offset and value.
_SCHWEFEL_OFFSET = 4.209687462275036e2
_SCHWEFEL_VALUE = 4.189828872724338e2
# Binding energy of the optimal 6-atom Lennard-Jones cluster.
_LJ6_ENERGY = 12.7120622568


class CecDataError(ValueError):
    """Shift/rotation data files are missing or malformed."""


@dataclass(frozen=True)
class CecData:
    """Parsed shift vectors and rotation matrices for CEC04-CEC10."""

    directory: Path
    shifts: Mapping[int, np.ndarray]
    rotations: Mapping[int, np.ndarray]


def data_directory() -> Path:
    """Directory holding the packaged shift/rotation data files."""
    return Path(__file__).resolve().parent / "data"


def required_files(directory: str | Path | None = None) -> list[Path]:
    base = Path(directory) if directory is not None else data_directory()
    names = [f"shift_data_{k}.txt" for k in _SHIFTED]
    names += [f"M_{k}_D{_DIMS[k]}.txt" for k in _SHIFTED]
    return [base / name for name in names]


def _parse_rows(path: Path) -> list[list[float]]:
    rows = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            tokens = line.split()
            if not tokens:
                continue
            try:
                rows.append([float(token) for token in tokens])
            except ValueError as exc:
                raise CecDataError(f"{path}:{lineno}: malformed number ({exc})") from exc
    return rows


_DATA_CACHE: dict[Path, CecData] = {}


def load_cec_data(directory: str | Path | None = None) -> CecData:
    """Parse and cache the shift/rotation files of a data directory.

    Raises CecDataError listing every missing file, or naming the file (and
    line, where applicable) of the first malformed value or wrong shape.
    """
    base = (Path(directory) if directory is not None else data_directory()).resolve()
    cached = _DATA_CACHE.get(base)
    if cached is not None:
        return cached

    missing = [str(path) for path in required_files(base) if not path.is_file()]
    if missing:
        raise CecDataError(
            "missing CEC2019 data files: " + ", ".join(missing)
        )

    shifts: dict[int, np.ndarray] = {}
    rotations: dict[int, np.ndarray] = {}
    for k in _SHIFTED:
        dims = _DIMS[k]
        shift_path = base / f"shift_data_{k}.txt"
        values = [v for row in _parse_rows(shift_path) for v in row]
        if len(values) != dims:
            raise CecDataError(
                f"{shift_path}: expected {dims} shift values, found {len(values)}"
            )
        shifts[k] = np.array(values, dtype=float)

        matrix_path = base / f"M_{k}_D{dims}.txt"
        rows = _parse_rows(matrix_path)
        if len(rows) != dims or any(len(row) != dims for row in rows):
            shape = f"{len(rows)}x{len(rows[0]) if rows else 0}"
            raise CecDataError(
                f"{matrix_path}: expected a {dims}x{dims} matrix, found {shape}"
            )
        rotations[k] = np.array(rows, dtype=float)

    data = CecData(
        directory=base,
        shifts=MappingProxyType(shifts),
        rotations=MappingProxyType(rotations),
    )
    _DATA_CACHE[base] = data
    return data


# --- the three plain problems ------------------------------------------------


def _chebyshev(X: np.ndarray) -> np.ndarray:
    """Storn's Chebyshev polynomial fitting problem (coefficients, leading first).

    Penalizes falling short of the degree-(D-1) Chebyshev value at +-1.2 and
    leaving the [-1, 1] band on a grid of 32*D+1 sample points.
    """
    m, dims = X.shape
    t_prev, t_curr = 1.0, 1.2
    for _ in range(dims - 2):
        t_prev, t_curr = t_curr, 2.4 * t_curr - t_prev
    target = t_curr

    def poly(at: float | np.ndarray) -> np.ndarray:
        value = np.broadcast_to(X[:, 0:1], (m, np.size(at))).copy()
        for j in range(1, dims):
            value = value * at + X[:, j : j + 1]
        return value

    p_hi = poly(1.2)[:, 0]
    p_lo = poly(-1.2)[:, 0]
    shortfall = np.where(p_hi < target, (p_hi - target) ** 2, 0.0)
    shortfall += np.where(p_lo < target, (p_lo - target) ** 2, 0.0)

    samples = 32 * dims
    grid = -1.0 + 2.0 * np.arange(samples + 1) / samples
    w = poly(grid)
    band = np.where(np.abs(w) > 1.0, (np.abs(w) - 1.0) ** 2, 0.0).sum(axis=1)
    return shortfall + band


def _hilbert(X: np.ndarray) -> np.ndarray:
    """Inverse Hilbert matrix problem: elementwise |H Z - I| for Z = x as a
    row-major sqrt(D) x sqrt(D) matrix."""
    m, dims = X.shape
    b = int(round(np.sqrt(dims)))
    idx = np.arange(b)
    hilbert = 1.0 / (idx[:, None] + idx[None, :] + 1.0)
    Z = X.reshape(m, b, b)
    residual = np.einsum("ij,mjk->mik", hilbert, Z) - np.eye(b)
    return np.abs(residual).sum(axis=(1, 2))


_LJ_PAIRS = np.array([(i, j) for i in range(6) for j in range(i + 1, 6)])


def _lennard_jones(X: np.ndarray) -> np.ndarray:
    """Minimum-energy configuration of 6 atoms under the 12-6 potential,
    offset by the known optimal binding energy."""
    m = X.shape[0]
    atoms = X.reshape(m, 6, 3)
    delta = atoms[:, _LJ_PAIRS[:, 0], :] - atoms[:, _LJ_PAIRS[:, 1], :]
    r2 = np.sum(delta**2, axis=2)
    r6 = r2**3
    safe = r6 > 1e-10
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        pair_energy = np.where(safe, (1.0 / r6 - 2.0) / r6, 1e20)
    return pair_energy.sum(axis=1) + _LJ6_ENERGY


# --- shifted/rotated base functions (z already transformed) -------------------


def _rastrigin(Z):
    return np.sum(Z**2 - 10.0 * np.cos(2.0 * np.pi * Z) + 10.0, axis=1)


def _griewank(Z):
    roots = np.sqrt(np.arange(1, Z.shape[1] + 1, dtype=float))
    return np.sum(Z**2, axis=1) / 4000.0 - np.prod(np.cos(Z / roots), axis=1) + 1.0


def _weierstrass(Z):
    k = np.arange(21, dtype=float)
    ak = 0.5**k
    bk = 3.0**k
    inner = np.sum(ak * np.cos(2.0 * np.pi * bk * (Z[:, :, None] + 0.5)), axis=2)
    baseline = np.sum(ak * np.cos(np.pi * bk))
    return inner.sum(axis=1) - Z.shape[1] * baseline


def _modified_schwefel(Z):
    dims = Z.shape[1]
    z = Z + _SCHWEFEL_OFFSET
    total = np.full(Z.shape[0], _SCHWEFEL_VALUE * dims)

    high = z > 500.0
    low = z < -500.0
    mid = ~(high | low)

    zm = np.where(mid, z, 0.0)
    total -= np.where(mid, zm * np.sin(np.sqrt(np.abs(zm))), 0.0).sum(axis=1)

    wrapped_hi = 500.0 - np.fmod(np.where(high, z, 0.0), 500.0)
    total -= np.where(high, wrapped_hi * np.sin(np.sqrt(np.abs(wrapped_hi))), 0.0).sum(axis=1)
    total += np.where(high, ((z - 500.0) / 100.0) ** 2 / dims, 0.0).sum(axis=1)

    wrapped_lo = np.fmod(np.abs(np.where(low, z, 0.0)), 500.0) - 500.0
    total -= np.where(
        low, wrapped_lo * np.sin(np.sqrt(np.abs(wrapped_lo))), 0.0
    ).sum(axis=1)
    total += np.where(low, ((z + 500.0) / 100.0) ** 2 / dims, 0.0).sum(axis=1)
    return total


def _expanded_schaffer6(Z):
    neighbor = np.roll(Z, -1, axis=1)
    squared = Z**2 + neighbor**2
    return np.sum(
        0.5 + (np.sin(np.sqrt(squared)) ** 2 - 0.5) / (1.0 + 0.001 * squared) ** 2,
        axis=1,
    )


def _happy_cat(Z):
    dims = Z.shape[1]
    z = Z - 1.0
    r2 = np.sum(z**2, axis=1)
    s = np.sum(z, axis=1)
    return np.abs(r2 - dims) ** 0.25 + (0.5 * r2 + s) / dims + 0.5


def _ackley(Z):
    dims = Z.shape[1]
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(Z**2, axis=1) / dims))
        - np.exp(np.sum(np.cos(2.0 * np.pi * Z), axis=1) / dims)
        + 20.0
        + np.e
    )


_BASE = {
    4: _rastrigin,
    5: _griewank,
    6: _weierstrass,
    7: _modified_schwefel,
    8: _expanded_schaffer6,
    9: _happy_cat,
    10: _ackley,
}

_PLAIN = {1: _chebyshev, 2: _hilbert, 3: _lennard_jones}


def _chebyshev_optimum(dims: int) -> np.ndarray:
    # Coefficients of the degree-(dims-1) Chebyshev polynomial, leading first.
    coeffs = np.polynomial.chebyshev.cheb2poly(np.eye(dims)[-1])[::-1]
    return np.asarray(coeffs, dtype=float)


_HILBERT4_INVERSE = np.array(
    [
        [16.0, -120.0, 240.0, -140.0],
        [-120.0, 1200.0, -2700.0, 1680.0],
        [240.0, -2700.0, 6480.0, -4200.0],
        [-140.0, 1680.0, -4200.0, 2800.0],
    ]
)


def _lennard_jones_optimum() -> np.ndarray:
    # Regular octahedron: 12 edges at r, 3 diagonals at sqrt(2)*r. Minimizing
    # the summed pair energy over r gives r^-6 = 264/257.
    edge = (264.0 / 257.0) ** (-1.0 / 6.0)
    half = edge / np.sqrt(2.0)
    vertices = np.array(
        [
            [half, 0.0, 0.0],
            [-half, 0.0, 0.0],
            [0.0, half, 0.0],
            [0.0, -half, 0.0],
            [0.0, 0.0, half],
            [0.0, 0.0, -half],
        ]
    )
    return vertices.ravel()


def make_cec(function_id: str, data: CecData | None = None) -> BenchmarkFunction:
    """Build one CEC2019 function, loading packaged data if none is given."""
    if function_id not in CEC_IDS:
        raise KeyError(f"unknown CEC2019 function id: {function_id!r}")
    number = int(function_id[3:])
    dims = _DIMS[number]
    half_range = _RANGES[number]
    bounds = Bounds.cube(-half_range, half_range, dims)

    if number in _PLAIN:
        base = _PLAIN[number]

        def batch(X, _base=base):
            return _base(X) + _BIAS

        optimum_position = {
            1: _chebyshev_optimum(dims),
            2: _HILBERT4_INVERSE.ravel(),
            3: _lennard_jones_optimum(),
        }[number]
    else:
        if data is None:
            data = load_cec_data()
        shift = data.shifts[number]
        rotation = data.rotations[number]
        rate = _RATES[number]
        base = _BASE[number]

        def batch(X, _base=base, _shift=shift, _rot=rotation, _rate=rate):
            Z = ((X - _shift) * _rate) @ _rot.T
            return _base(Z) + _BIAS

        optimum_position = shift.copy()

    return BenchmarkFunction(
        function_id=function_id,
        family="composite",
        bounds=bounds,
        batch=batch,
        known_optimum=_BIAS,
        optimum_position=optimum_position,
    )


def cec_registry(data: CecData | None = None) -> list[BenchmarkFunction]:
    """All ten CEC2019 functions."""
    if data is None:
        data = load_cec_data()
    return [make_cec(function_id, data) for function_id in CEC_IDS]
