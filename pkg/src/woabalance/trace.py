"""Line-delimited trace files: every agent position of every iteration.

A trace is a JSON-lines file. The first record is a header carrying the
swarm size, dimension, function name and seed; each following record holds
one iteration index plus the full (n, D) position matrix as nested arrays.
Floats are serialized with Python's repr (the json default), which
round-trips float64 exactly, so offline analysis of a trace is bit-identical
to the in-run measurement.

    {"record": "header", "n": 30, "dims": 30, "function": "F1", "seed": 7}
    {"record": "iteration", "iteration": 1, "positions": [[...], ...]}
    ...
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .diversity import BalanceSeries, analyze_trace

__all__ = ["TraceData", "TraceFormatError", "write_trace", "read_trace", "analyze_trace_file"]


class TraceFormatError(ValueError):
    """A trace file violates the line-delimited record format."""


@dataclass
class TraceData:
    """In-memory form of a trace file."""

    function: str
    seed: int
    n: int
    dims: int
    iterations: list[int]
    matrices: list[np.ndarray]

    def balance(self) -> BalanceSeries:
        return analyze_trace(self.matrices, self.iterations)


def write_trace(
    path: str | Path,
    function: str,
    seed: int,
    matrices: Sequence[np.ndarray],
    iterations: Sequence[int] | None = None,
) -> Path:
    """Write one run's iteration-ordered position matrices as a trace file."""
    matrices = [np.asarray(m, dtype=float) for m in matrices]
    if not matrices:
        raise ValueError("refusing to write an empty trace")
    n, dims = matrices[0].shape
    if iterations is None:
        iterations = list(range(1, len(matrices) + 1))
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        header = {"record": "header", "n": n, "dims": dims, "function": function, "seed": int(seed)}
        fh.write(json.dumps(header) + "\n")
        for index, matrix in zip(iterations, matrices):
            row = {
                "record": "iteration",
                "iteration": int(index),
                "positions": matrix.tolist(),
            }
            fh.write(json.dumps(row) + "\n")
    return path


def read_trace(path: str | Path) -> TraceData:
    """Parse a trace file, validating record structure and matrix shapes."""
    path = Path(path)
    header = None
    iterations: list[int] = []
    matrices: list[np.ndarray] = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise TraceFormatError(f"{path}:{lineno}: not valid JSON ({exc})") from exc
            kind = record.get("record")
            if kind == "header":
                if header is not None:
                    raise TraceFormatError(f"{path}:{lineno}: duplicate header record")
                missing = {"n", "dims", "function", "seed"} - record.keys()
                if missing:
                    raise TraceFormatError(
                        f"{path}:{lineno}: header missing fields {sorted(missing)}"
                    )
                header = record
            elif kind == "iteration":
                if header is None:
                    raise TraceFormatError(f"{path}:{lineno}: iteration record before header")
                try:
                    matrix = np.array(record["positions"], dtype=float)
                    index = int(record["iteration"])
                except (KeyError, TypeError, ValueError) as exc:
                    raise TraceFormatError(f"{path}:{lineno}: malformed iteration record") from exc
                expected = (int(header["n"]), int(header["dims"]))
                if matrix.shape != expected:
                    raise TraceFormatError(
                        f"{path}:{lineno}: iteration {index} has positions of shape "
                        f"{tuple(matrix.shape)}, header declares {expected}"
                    )
                iterations.append(index)
                matrices.append(matrix)
            else:
                raise TraceFormatError(f"{path}:{lineno}: unknown record type {kind!r}")
    if header is None:
        raise TraceFormatError(f"{path}: no header record")
    if not matrices:
        raise TraceFormatError(f"{path}: no iteration records")
    return TraceData(
        function=str(header["function"]),
        seed=int(header["seed"]),
        n=int(header["n"]),
        dims=int(header["dims"]),
        iterations=iterations,
        matrices=matrices,
    )


def analyze_trace_file(path: str | Path) -> BalanceSeries:
    """Read a trace file and compute its exploration/exploitation split."""
    return read_trace(path).balance()
