import csv
import re

import pytest

from woabalance.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBenchList:
    def test_lists_33_functions(self, capsys):
        code, out, _ = run_cli(["bench", "list"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 33
        assert lines[0].startswith("F1\t")
        assert lines[-1].startswith("CEC10\t")

    def test_out_writes_listing(self, capsys, tmp_path):
        code, _, _ = run_cli(["bench", "list", "--out", str(tmp_path)], capsys)
        assert code == 0
        assert (tmp_path / "functions.txt").read_text().count("\n") == 33


class TestRun:
    def test_run_writes_curves_and_trace(self, capsys, tmp_path):
        code, out, _ = run_cli(
            ["run", "--function", "F16", "--agents", "4", "--iterations", "6",
             "--seed", "3", "--out", str(tmp_path), "--trace"],
            capsys,
        )
        assert code == 0
        assert (tmp_path / "F16_seed3_convergence.csv").is_file()
        assert (tmp_path / "F16_seed3_balance.csv").is_file()
        assert (tmp_path / "F16_seed3.jsonl").is_file()
        assert "xpl=" in out

    def test_trace_requires_out(self, capsys, monkeypatch):
        monkeypatch.delenv("WOABALANCE_OUT", raising=False)
        code, _, err = run_cli(["run", "--function", "F1", "--trace"], capsys)
        assert code == 1
        assert err.startswith("error:")

    def test_unknown_function_is_one_line_error(self, capsys):
        code, _, err = run_cli(["run", "--function", "nope"], capsys)
        assert code == 1
        assert len(err.strip().splitlines()) == 1


class TestAnalyze:
    def test_analyze_matches_in_run_aggregate(self, capsys, tmp_path):
        code, out_run, _ = run_cli(
            ["run", "--function", "F9", "--agents", "5", "--iterations", "8",
             "--seed", "11", "--out", str(tmp_path), "--trace"],
            capsys,
        )
        assert code == 0
        xpl_run = re.search(r"xpl=([0-9.]+)%", out_run).group(1)
        code, out_an, _ = run_cli(
            ["analyze", str(tmp_path / "F9_seed11.jsonl"), "--out", str(tmp_path)],
            capsys,
        )
        assert code == 0
        xpl_an = re.search(r"xpl=([0-9.]+)%", out_an).group(1)
        assert xpl_run == xpl_an
        assert (tmp_path / "F9_seed11_balance.csv").is_file()

    def test_missing_trace_file(self, capsys, tmp_path):
        code, _, err = run_cli(["analyze", str(tmp_path / "none.jsonl")], capsys)
        assert code == 1
        assert "error:" in err


class TestExperimentAndReport:
    def test_tiny_experiment_then_reemit(self, capsys, tmp_path):
        out_dir = tmp_path / "exp"
        code, out, _ = run_cli(
            ["experiment", "--functions", "F1,F18", "--reps", "2", "--agents", "3",
             "--iterations", "4", "--seed", "5", "--out", str(out_dir), "--no-figures"],
            capsys,
        )
        assert code == 0
        assert "suite average" in out
        report_bytes = (out_dir / "report.csv").read_bytes()
        with (out_dir / "report.csv").open() as fh:
            rows = list(csv.reader(fh))
        assert [r[0] for r in rows[1:]] == ["F1", "F18"]

        redo = tmp_path / "redo"
        code, out, _ = run_cli(
            ["report", str(out_dir / "summary.json"), "--out", str(redo), "--no-figures"],
            capsys,
        )
        assert code == 0
        assert (redo / "report.csv").read_bytes() == report_bytes

    def test_experiment_figures_rendered(self, capsys, tmp_path):
        code, _, _ = run_cli(
            ["experiment", "--functions", "F16", "--reps", "1", "--agents", "3",
             "--iterations", "4", "--out", str(tmp_path)],
            capsys,
        )
        assert code == 0
        assert (tmp_path / "F16_curves.png").stat().st_size > 0

    def test_env_var_default_out(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("WOABALANCE_OUT", str(tmp_path / "env"))
        code, _, _ = run_cli(
            ["experiment", "--functions", "F16", "--reps", "1", "--agents", "3",
             "--iterations", "4", "--no-figures"],
            capsys,
        )
        assert code == 0
        assert (tmp_path / "env" / "report.csv").is_file()


class TestUsageErrors:
    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["bench", "list", "--frobnicate"])
        assert exc.value.code == 2

    def test_missing_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
