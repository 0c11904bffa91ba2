"""Command-line interface.

Subcommands:

    bench list     list every registered benchmark function
    run            one seeded WOA run, with optional trace export
    experiment     the full repeated-runs protocol with CSV/figure reports
    analyze        offline balance analysis of exported trace files
    report         re-emit tables, curves and figures from a summary.json

Every subcommand accepts --seed and --out; parameters default to the
reference protocol (30 repetitions, 30 agents, 500 iterations). The
WOABALANCE_OUT environment variable supplies a default output directory;
explicit --out always wins.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import benchmarks, harness
from .benchmarks import CecDataError
from .trace import TraceFormatError, read_trace

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=1, help="base random seed (default: 1)")
    common.add_argument(
        "--out",
        type=Path,
        default=None,
        help=f"output directory (default: ${harness.OUTPUT_DIR_ENV} if set)",
    )

    parser = argparse.ArgumentParser(
        prog="woabalance",
        description="Whale Optimization Algorithm runs with exploration/exploitation measurement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bench = sub.add_parser("bench", parents=[common], help="benchmark registry utilities")
    p_bench.add_argument("action", choices=["list"], help="registry action")

    p_run = sub.add_parser("run", parents=[common], help="single instrumented WOA run")
    p_run.add_argument("--function", required=True, help="benchmark id, e.g. F1 or CEC04")
    p_run.add_argument("--agents", type=int, default=30, help="swarm size (default: 30)")
    p_run.add_argument("--iterations", type=int, default=500, help="iterations (default: 500)")
    p_run.add_argument(
        "--trace", action="store_true", help="export the full position trace (needs --out)"
    )

    p_exp = sub.add_parser("experiment", parents=[common], help="full repeated-runs protocol")
    p_exp.add_argument(
        "--functions",
        nargs="+",
        default=["all"],
        help="ids and/or aliases classical|cec2019|all (default: all)",
    )
    p_exp.add_argument("--reps", type=int, default=30, help="repetitions per function (default: 30)")
    p_exp.add_argument("--agents", type=int, default=30, help="swarm size (default: 30)")
    p_exp.add_argument("--iterations", type=int, default=500, help="iterations (default: 500)")
    p_exp.add_argument("--workers", type=int, default=1, help="parallel run processes (default: 1)")
    p_exp.add_argument(
        "--export-traces", action="store_true", help="write one trace file per repetition"
    )
    p_exp.add_argument(
        "--no-figures", action="store_true", help="skip PNG rendering, emit CSV/JSON only"
    )

    p_analyze = sub.add_parser("analyze", parents=[common], help="offline trace analysis")
    p_analyze.add_argument("traces", nargs="+", type=Path, help="trace file(s) to analyze")

    p_report = sub.add_parser("report", parents=[common], help="re-emit outputs from a summary")
    p_report.add_argument("summary", type=Path, help="summary.json of a stored experiment")
    p_report.add_argument(
        "--no-figures", action="store_true", help="skip PNG rendering, emit CSV/JSON only"
    )

    return parser


def _resolve_out(args: argparse.Namespace) -> Path | None:
    return args.out if args.out is not None else harness.default_output_dir()


def _cmd_bench(args: argparse.Namespace) -> int:
    lines = [f.describe() for f in benchmarks.registry()]
    text = "\n".join(lines) + "\n"
    out = _resolve_out(args)
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / "functions.txt").write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    out = _resolve_out(args)
    if args.trace and out is None:
        raise ValueError("--trace needs an output directory (--out)")
    trace_path = None
    if args.trace:
        out.mkdir(parents=True, exist_ok=True)
        trace_path = out / f"{args.function}_seed{args.seed}.jsonl"
    record = harness.single_run(
        args.function, args.agents, args.iterations, args.seed, trace_path
    )
    print(
        f"{record.function_id} seed={record.seed} best={record.final_best!r} "
        f"xpl={record.xpl_aggregate:.4f}% xpt={record.xpt_aggregate:.4f}%"
    )
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        stem = f"{record.function_id}_seed{record.seed}"
        _write_single_run_curves(record, out, stem)
        print(f"wrote {out / stem}_convergence.csv and {out / stem}_balance.csv")
        if trace_path is not None:
            print(f"wrote {trace_path}")
    return 0


def _write_single_run_curves(record: harness.RunRecord, out: Path, stem: str) -> None:
    import csv

    with (out / f"{stem}_convergence.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["iteration", "best_fitness"])
        for t, value in enumerate(record.best_history, start=1):
            writer.writerow([t, repr(float(value))])
    with (out / f"{stem}_balance.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["iteration", "xpl_pct", "xpt_pct"])
        for t, (xpl, xpt) in enumerate(zip(record.xpl_series, record.xpt_series), start=1):
            writer.writerow([t, repr(float(xpl)), repr(float(xpt))])


def _cmd_experiment(args: argparse.Namespace) -> int:
    config = harness.ExperimentConfig(
        functions=harness.expand_function_ids(args.functions),
        repetitions=args.reps,
        agents=args.agents,
        iterations=args.iterations,
        base_seed=args.seed,
        output_dir=_resolve_out(args),
        export_traces=args.export_traces,
        workers=args.workers,
        render_figures=not args.no_figures,
    )
    report = harness.run_experiment(config)
    for fid in report.functions:
        fr = report.per_function[fid]
        print(
            f"{fid}: mean_best={fr.mean_best:.6g} "
            f"xpl={fr.mean_xpl:.4f}% xpt={fr.mean_xpt:.4f}%"
        )
    print(
        f"suite average: xpl={report.suite_mean_xpl:.4f}% xpt={report.suite_mean_xpt:.4f}%"
    )
    if config.output_dir is not None:
        print(f"report written to {config.output_dir}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    out = _resolve_out(args)
    for path in args.traces:
        data = read_trace(path)
        balance = data.balance()
        print(
            f"{path}: function={data.function} seed={data.seed} n={data.n} D={data.dims} "
            f"xpl={balance.xpl_aggregate:.4f}% xpt={balance.xpt_aggregate:.4f}%"
        )
        if out is not None:
            out.mkdir(parents=True, exist_ok=True)
            import csv

            target = out / f"{Path(path).stem}_balance.csv"
            with target.open("w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["iteration", "xpl_pct", "xpt_pct"])
                for snapshot, xpl, xpt in zip(
                    balance.div_series, balance.xpl_series, balance.xpt_series
                ):
                    writer.writerow(
                        [snapshot.iteration, repr(float(xpl)), repr(float(xpt))]
                    )
            print(f"wrote {target}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    report = harness.report_from_summary(args.summary)
    out = _resolve_out(args)
    if out is None:
        out = Path(args.summary).resolve().parent
    paths = harness.write_report(report, out, render_figures=not args.no_figures)
    print(f"re-emitted report for {len(report.functions)} function(s) into {out}")
    print(f"report table: {paths['report_csv']}")
    return 0


_COMMANDS = {
    "bench": _cmd_bench,
    "run": _cmd_run,
    "experiment": _cmd_experiment,
    "analyze": _cmd_analyze,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (
        ValueError,
        KeyError,
        OSError,
        CecDataError,
        TraceFormatError,
    ) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
