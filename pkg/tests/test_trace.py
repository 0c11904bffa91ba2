import json

import numpy as np
import pytest

from woabalance import benchmarks, woa
from woabalance.diversity import DiversityRecorder
from woabalance.trace import TraceFormatError, analyze_trace_file, read_trace, write_trace


def small_run(tmp_path, fid="F1", n=6, T=12, seed=5):
    f = benchmarks.get(fid)
    recorder = DiversityRecorder()
    result = woa.run(f, n, T, seed, hook=recorder, record_trace=True)
    path = tmp_path / "run.jsonl"
    write_trace(path, fid, seed, result.trace)
    return path, result, recorder


class TestRoundTrip:
    def test_bitwise_roundtrip(self, tmp_path):
        path, result, _ = small_run(tmp_path)
        data = read_trace(path)
        assert data.function == "F1" and data.seed == 5
        assert (data.n, data.dims) == (6, 30)
        assert data.iterations == list(range(1, 13))
        for original, parsed in zip(result.trace, data.matrices):
            assert np.array_equal(original, parsed)

    def test_offline_matches_in_run_bitwise(self, tmp_path):
        path, _, recorder = small_run(tmp_path)
        offline = analyze_trace_file(path)
        in_run = recorder.balance()
        assert np.array_equal(offline.xpl_series, in_run.xpl_series)
        assert offline.xpl_aggregate == in_run.xpl_aggregate
        assert offline.div_max == in_run.div_max

    def test_empty_write_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            write_trace(tmp_path / "x.jsonl", "F1", 0, [])


class TestFormatErrors:
    def write_lines(self, tmp_path, lines):
        path = tmp_path / "broken.jsonl"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def header(self, n=2, dims=1):
        return json.dumps({"record": "header", "n": n, "dims": dims, "function": "F1", "seed": 0})

    def test_not_json(self, tmp_path):
        path = self.write_lines(tmp_path, ["{nope"])
        with pytest.raises(TraceFormatError, match=":1"):
            read_trace(path)

    def test_missing_header(self, tmp_path):
        row = json.dumps({"record": "iteration", "iteration": 1, "positions": [[0.0], [1.0]]})
        path = self.write_lines(tmp_path, [row])
        with pytest.raises(TraceFormatError, match="before header"):
            read_trace(path)

    def test_duplicate_header(self, tmp_path):
        path = self.write_lines(tmp_path, [self.header(), self.header()])
        with pytest.raises(TraceFormatError, match="duplicate header"):
            read_trace(path)

    def test_header_missing_fields(self, tmp_path):
        path = self.write_lines(tmp_path, [json.dumps({"record": "header", "n": 2})])
        with pytest.raises(TraceFormatError, match="missing fields"):
            read_trace(path)

    def test_shape_mismatch_names_line_and_iteration(self, tmp_path):
        row = json.dumps({"record": "iteration", "iteration": 3, "positions": [[0.0]]})
        path = self.write_lines(tmp_path, [self.header(), row])
        with pytest.raises(TraceFormatError, match="iteration 3"):
            read_trace(path)

    def test_unknown_record_type(self, tmp_path):
        path = self.write_lines(tmp_path, [self.header(), json.dumps({"record": "woops"})])
        with pytest.raises(TraceFormatError, match="unknown record type"):
            read_trace(path)

    def test_no_iterations(self, tmp_path):
        path = self.write_lines(tmp_path, [self.header()])
        with pytest.raises(TraceFormatError, match="no iteration records"):
            read_trace(path)
