"""Experiment harness: repeated seeded WOA runs with balance aggregation.

The default configuration mirrors the reference protocol: 30 repetitions of
30 search agents over 500 iterations per function, repetition k seeded with
base_seed + k. Each run is measured in-run by a DiversityRecorder hook; the
report carries per-function means and standard deviations of the final best
fitness and of the per-run aggregate exploration/exploitation percentages,
plus repetition-averaged per-iteration curves.

Reports persist as CSV files (stable byte-for-byte for a fixed config and
base seed) next to a machine-readable summary.json that can re-emit every
table, curve and figure without re-running.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from . import benchmarks, woa
from .diversity import DiversityRecorder
from .trace import write_trace

__all__ = [
    "ExperimentConfig",
    "FunctionReport",
    "ExperimentReport",
    "RunRecord",
    "single_run",
    "run_experiment",
    "emit_curves",
    "write_report",
    "report_from_summary",
    "REPORT_COLUMNS",
    "OUTPUT_DIR_ENV",
]

#: Column order of report.csv; fixed interface, do not reorder.
REPORT_COLUMNS = (
    "function_id",
    "reps",
    "agents",
    "iterations",
    "mean_best",
    "std_best",
    "mean_xpl_pct",
    "std_xpl_pct",
    "mean_xpt_pct",
    "std_xpt_pct",
)

#: Environment variable supplying the default output directory; explicit
#: flags/arguments always win.
OUTPUT_DIR_ENV = "WOABALANCE_OUT"


@dataclass
class ExperimentConfig:
    """Protocol parameters for one experiment."""

    functions: tuple[str, ...]
    repetitions: int = 30
    agents: int = 30
    iterations: int = 500
    base_seed: int = 1
    output_dir: Path | None = None
    export_traces: bool = False
    workers: int = 1
    render_figures: bool = True

    def __post_init__(self):
        self.functions = tuple(self.functions)
        if not self.functions:
            raise ValueError("no functions selected")
        unknown = [fid for fid in self.functions if fid not in benchmarks.ALL_IDS]
        if unknown:
            raise KeyError(f"unknown function id(s): {', '.join(unknown)}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if self.agents < 2:
            raise ValueError("need at least 2 agents")
        if self.iterations < 1:
            raise ValueError("need at least 1 iteration")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.output_dir is not None:
            self.output_dir = Path(self.output_dir)
        if self.export_traces and self.output_dir is None:
            raise ValueError("trace export needs an output directory")

    def seeds(self) -> list[int]:
        return [self.base_seed + rep for rep in range(self.repetitions)]


@dataclass
class RunRecord:
    """Everything kept from a single (function, repetition) run."""

    function_id: str
    seed: int
    final_best: float
    best_history: np.ndarray
    xpl_series: np.ndarray
    xpt_series: np.ndarray
    xpl_aggregate: float
    xpt_aggregate: float
    div_max: float


@dataclass
class FunctionReport:
    """Aggregate of all repetitions of one function."""

    function_id: str
    seeds: list[int]
    final_bests: np.ndarray
    xpl_aggregates: np.ndarray
    xpt_aggregates: np.ndarray
    mean_convergence: np.ndarray
    mean_xpl_curve: np.ndarray
    mean_xpt_curve: np.ndarray

    @property
    def mean_best(self) -> float:
        return float(self.final_bests.mean())

    @property
    def std_best(self) -> float:
        return float(self.final_bests.std())

    @property
    def mean_xpl(self) -> float:
        return float(self.xpl_aggregates.mean())

    @property
    def std_xpl(self) -> float:
        return float(self.xpl_aggregates.std())

    @property
    def mean_xpt(self) -> float:
        return float(self.xpt_aggregates.mean())

    @property
    def std_xpt(self) -> float:
        return float(self.xpt_aggregates.std())


@dataclass
class ExperimentReport:
    """Per-function aggregates plus suite-wide averages."""

    functions: tuple[str, ...]
    repetitions: int
    agents: int
    iterations: int
    base_seed: int
    per_function: dict[str, FunctionReport] = field(default_factory=dict)

    @property
    def suite_mean_xpl(self) -> float:
        return float(np.mean([fr.mean_xpl for fr in self.per_function.values()]))

    @property
    def suite_mean_xpt(self) -> float:
        return float(np.mean([fr.mean_xpt for fr in self.per_function.values()]))

    def seed_ledger(self) -> dict[str, list[int]]:
        return {fid: list(fr.seeds) for fid, fr in self.per_function.items()}


def single_run(
    function_id: str,
    agents: int,
    iterations: int,
    seed: int,
    trace_path: str | Path | None = None,
) -> RunRecord:
    """One seeded WOA run with in-run balance measurement."""
    f = benchmarks.get(function_id)
    recorder = DiversityRecorder()
    result = woa.run(
        f, agents, iterations, seed, hook=recorder, record_trace=trace_path is not None
    )
    balance = recorder.balance()
    if trace_path is not None:
        write_trace(trace_path, function_id, seed, result.trace)
    return RunRecord(
        function_id=function_id,
        seed=seed,
        final_best=float(result.best.fitness),
        best_history=result.history,
        xpl_series=balance.xpl_series,
        xpt_series=balance.xpt_series,
        xpl_aggregate=balance.xpl_aggregate,
        xpt_aggregate=balance.xpt_aggregate,
        div_max=balance.div_max,
    )


def _run_task(task: tuple[str, int, int, int, int, str | None]) -> tuple[str, int, RunRecord]:
    function_id, rep, agents, iterations, seed, trace_path = task
    record = single_run(function_id, agents, iterations, seed, trace_path)
    return function_id, rep, record


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Execute the full protocol and (if configured) persist the report.

    Repetition k of every function runs from seed base_seed + k. Workers > 1
    spreads (function, repetition) runs over processes; aggregation sorts by
    repetition index, so execution order never affects the report.
    """
    trace_dir = None
    if config.export_traces:
        trace_dir = config.output_dir / "traces"
        trace_dir.mkdir(parents=True, exist_ok=True)

    tasks = []
    for fid in config.functions:
        for rep, seed in enumerate(config.seeds()):
            trace_path = (
                str(trace_dir / f"{fid}_rep{rep:02d}.jsonl") if trace_dir is not None else None
            )
            tasks.append((fid, rep, config.agents, config.iterations, seed, trace_path))

    results: dict[tuple[str, int], RunRecord] = {}
    if config.workers == 1:
        for task in tasks:
            fid, rep, record = _run_task(task)
            results[(fid, rep)] = record
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for fid, rep, record in pool.map(_run_task, tasks, chunksize=4):
                results[(fid, rep)] = record

    report = ExperimentReport(
        functions=config.functions,
        repetitions=config.repetitions,
        agents=config.agents,
        iterations=config.iterations,
        base_seed=config.base_seed,
    )
    for fid in config.functions:
        records = [results[(fid, rep)] for rep in range(config.repetitions)]
        report.per_function[fid] = FunctionReport(
            function_id=fid,
            seeds=[r.seed for r in records],
            final_bests=np.array([r.final_best for r in records]),
            xpl_aggregates=np.array([r.xpl_aggregate for r in records]),
            xpt_aggregates=np.array([r.xpt_aggregate for r in records]),
            mean_convergence=np.mean([r.best_history for r in records], axis=0),
            mean_xpl_curve=np.mean([r.xpl_series for r in records], axis=0),
            mean_xpt_curve=np.mean([r.xpt_series for r in records], axis=0),
        )

    if config.output_dir is not None:
        write_report(report, config.output_dir, render_figures=config.render_figures)
    return report


def _fmt(value: float) -> str:
    # repr round-trips float64 exactly; reports are byte-stable per config.
    return repr(float(value))


def emit_curves(report: ExperimentReport, function_id: str, out_dir: str | Path) -> list[Path]:
    """Write the convergence and balance curve CSVs of one function."""
    fr = report.per_function.get(function_id)
    if fr is None:
        raise KeyError(f"function {function_id!r} not present in this report")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    convergence = out_dir / f"{function_id}_convergence.csv"
    with convergence.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["iteration", "mean_best_fitness"])
        for t, value in enumerate(fr.mean_convergence, start=1):
            writer.writerow([t, _fmt(value)])

    balance = out_dir / f"{function_id}_balance.csv"
    with balance.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["iteration", "mean_xpl_pct", "mean_xpt_pct"])
        for t, (xpl, xpt) in enumerate(zip(fr.mean_xpl_curve, fr.mean_xpt_curve), start=1):
            writer.writerow([t, _fmt(xpl), _fmt(xpt)])

    return [convergence, balance]


def write_report(
    report: ExperimentReport, out_dir: str | Path, render_figures: bool = True
) -> dict[str, object]:
    """Persist report.csv, per-function curves, summary.json and figures."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    report_csv = out_dir / "report.csv"
    with report_csv.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for fid in report.functions:
            fr = report.per_function[fid]
            writer.writerow(
                [
                    fid,
                    report.repetitions,
                    report.agents,
                    report.iterations,
                    _fmt(fr.mean_best),
                    _fmt(fr.std_best),
                    _fmt(fr.mean_xpl),
                    _fmt(fr.std_xpl),
                    _fmt(fr.mean_xpt),
                    _fmt(fr.std_xpt),
                ]
            )

    curve_paths = []
    for fid in report.functions:
        curve_paths += emit_curves(report, fid, out_dir)

    summary_path = out_dir / "summary.json"
    with summary_path.open("w", encoding="utf-8") as fh:
        json.dump(_summary_payload(report), fh, indent=1)
        fh.write("\n")

    figure_paths = []
    if render_figures:
        from .figures import render_report_figures

        figure_paths = render_report_figures(report, out_dir)

    return {
        "report_csv": report_csv,
        "curves": curve_paths,
        "summary": summary_path,
        "figures": figure_paths,
    }


def _summary_payload(report: ExperimentReport) -> dict:
    return {
        "config": {
            "functions": list(report.functions),
            "repetitions": report.repetitions,
            "agents": report.agents,
            "iterations": report.iterations,
            "base_seed": report.base_seed,
        },
        "suite": {
            "mean_xpl_pct": report.suite_mean_xpl,
            "mean_xpt_pct": report.suite_mean_xpt,
        },
        "seed_ledger": report.seed_ledger(),
        "functions": {
            fid: {
                "seeds": list(fr.seeds),
                "final_bests": fr.final_bests.tolist(),
                "xpl_aggregates": fr.xpl_aggregates.tolist(),
                "xpt_aggregates": fr.xpt_aggregates.tolist(),
                "mean_convergence": fr.mean_convergence.tolist(),
                "mean_xpl_curve": fr.mean_xpl_curve.tolist(),
                "mean_xpt_curve": fr.mean_xpt_curve.tolist(),
            }
            for fid, fr in report.per_function.items()
        },
    }


def report_from_summary(path: str | Path) -> ExperimentReport:
    """Rebuild an ExperimentReport from a stored summary.json."""
    with Path(path).open("r", encoding="utf-8") as fh:
        payload = json.load(fh)
    config = payload["config"]
    report = ExperimentReport(
        functions=tuple(config["functions"]),
        repetitions=int(config["repetitions"]),
        agents=int(config["agents"]),
        iterations=int(config["iterations"]),
        base_seed=int(config["base_seed"]),
    )
    for fid in report.functions:
        raw = payload["functions"][fid]
        report.per_function[fid] = FunctionReport(
            function_id=fid,
            seeds=[int(s) for s in raw["seeds"]],
            final_bests=np.array(raw["final_bests"], dtype=float),
            xpl_aggregates=np.array(raw["xpl_aggregates"], dtype=float),
            xpt_aggregates=np.array(raw["xpt_aggregates"], dtype=float),
            mean_convergence=np.array(raw["mean_convergence"], dtype=float),
            mean_xpl_curve=np.array(raw["mean_xpl_curve"], dtype=float),
            mean_xpt_curve=np.array(raw["mean_xpt_curve"], dtype=float),
        )
    return report


def default_output_dir() -> Path | None:
    """Output directory from the environment, if configured."""
    value = os.environ.get(OUTPUT_DIR_ENV)
    return Path(value) if value else None


def expand_function_ids(tokens: Iterable[str]) -> tuple[str, ...]:
    """Expand id tokens and the set aliases classical/cec2019/all."""
    out: list[str] = []
    for token in tokens:
        for piece in token.replace(",", " ").split():
            alias = piece.lower()
            if alias == "classical":
                out.extend(benchmarks.CLASSICAL_IDS)
            elif alias in ("cec2019", "cec"):
                out.extend(benchmarks.CEC_IDS)
            elif alias == "all":
                out.extend(benchmarks.ALL_IDS)
            else:
                out.append(piece)
    seen = set()
    unique = [fid for fid in out if not (fid in seen or seen.add(fid))]
    return tuple(unique)
