"""Figure rendering for experiment reports.

One PNG per function, written next to the curve CSVs: the repetition-averaged
convergence curve and the exploration/exploitation percentage curves. The
CSVs stay the interface of record; these figures are the same data rendered
for quick inspection.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .harness import ExperimentReport

__all__ = ["render_function_figure", "render_report_figures"]


def render_function_figure(
    report: ExperimentReport, function_id: str, out_path: str | Path
) -> Path:
    """Render one function's convergence and balance curves to `out_path`."""
    fr = report.per_function.get(function_id)
    if fr is None:
        raise KeyError(f"function {function_id!r} not present in this report")
    out_path = Path(out_path)

    iterations = np.arange(1, report.iterations + 1)
    fig, (ax_conv, ax_balance) = plt.subplots(1, 2, figsize=(9.0, 3.4))

    ax_conv.plot(iterations, fr.mean_convergence, color="tab:blue", lw=1.2)
    if np.all(fr.mean_convergence > 0):
        ax_conv.set_yscale("log")
    ax_conv.set_xlabel("iteration")
    ax_conv.set_ylabel("mean best fitness")
    ax_conv.set_title(f"{function_id} convergence")

    ax_balance.plot(iterations, fr.mean_xpl_curve, color="tab:red", lw=1.2, label="exploration %")
    ax_balance.plot(iterations, fr.mean_xpt_curve, color="tab:green", lw=1.2, label="exploitation %")
    ax_balance.set_ylim(-2, 102)
    ax_balance.set_xlabel("iteration")
    ax_balance.set_ylabel("percentage")
    ax_balance.set_title(f"{function_id} exploration/exploitation")
    ax_balance.legend(loc="center right", fontsize=8)

    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
    return out_path


def render_report_figures(report: ExperimentReport, out_dir: str | Path) -> list[Path]:
    """Render every function's figure into `out_dir`."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return [
        render_function_figure(report, fid, out_dir / f"{fid}_curves.png")
        for fid in report.functions
    ]
