#!/usr/bin/env python3
"""Regenerate the packaged CEC2019 shift/rotation data files.

Shift vectors are uniform in [-80, 80] and rotation matrices are random
orthogonal matrices (QR of a standard-normal matrix with the R-diagonal sign
fix), both drawn from fixed per-function PCG64 seeds, so regeneration is
byte-for-byte reproducible. Values are written with repr precision and parse
back to the exact float64 used to generate them.

Usage: python tools/make_cec_data.py [output_dir]
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

DIMS = 10
FUNCTIONS = range(4, 11)
SEED_BASE = 201900


def orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def write_matrix(path: Path, matrix: np.ndarray) -> None:
    with path.open("w", encoding="utf-8") as fh:
        for row in np.atleast_2d(matrix):
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")


def main(argv: list[str]) -> int:
    out = Path(argv[1]) if len(argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "woabalance" / "benchmarks" / "data"
    )
    out.mkdir(parents=True, exist_ok=True)
    for k in FUNCTIONS:
        rng = np.random.Generator(np.random.PCG64(SEED_BASE + k))
        shift = rng.uniform(-80.0, 80.0, DIMS)
        rotation = orthogonal(rng, DIMS)
        write_matrix(out / f"shift_data_{k}.txt", shift)
        write_matrix(out / f"M_{k}_D{DIMS}.txt", rotation)
        print(f"wrote shift_data_{k}.txt and M_{k}_D{DIMS}.txt")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
