import shutil

import numpy as np
import pytest

from woabalance.benchmarks import (
    ALL_IDS,
    CEC_IDS,
    CLASSICAL_IDS,
    CecDataError,
    data_directory,
    evaluate,
    get,
    load_cec_data,
    make_classical,
    registry,
    required_files,
)
from woabalance.core import RngStream


class TestRegistry:
    def test_thirty_three_entries(self):
        funcs = registry()
        assert len(funcs) == 33
        assert [f.function_id for f in funcs] == list(ALL_IDS)

    def test_ids_resolve_uniquely(self):
        seen = {f.function_id for f in registry()}
        assert len(seen) == 33

    def test_families(self):
        assert get("F1").family == "unimodal"
        assert get("F7").family == "unimodal"
        assert get("F8").family == "multimodal"
        assert get("F14").family == "fixed-dimension multimodal"
        assert all(get(fid).family == "composite" for fid in CEC_IDS)

    def test_default_dimensions(self):
        assert get("F1").default_dims == 30
        assert get("F14").default_dims == 2
        assert get("CEC01").default_dims == 9
        assert get("CEC02").default_dims == 16
        assert get("CEC03").default_dims == 18
        assert all(get(f"CEC{k:02d}").default_dims == 10 for k in range(4, 11))

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            get("F24")


class TestEvaluation:
    def test_sphere_at_origin(self):
        assert evaluate("F1", np.zeros(30)) == 0.0

    def test_rastrigin_at_origin(self):
        assert evaluate("F9", np.zeros(30)) == 0.0

    def test_sphere_hand_value(self):
        f = make_classical("F1", dims=2)
        assert f.evaluate(np.array([1.0, 2.0])) == 5.0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            evaluate("F1", np.zeros(7))

    def test_noisy_function_requires_rng(self):
        with pytest.raises(ValueError):
            evaluate("F7", np.zeros(30))

    def test_noisy_function_deterministic_under_same_stream(self):
        x = np.full(30, 0.1)
        assert evaluate("F7", x, RngStream(3)) == evaluate("F7", x, RngStream(3))

    def test_purity(self):
        rng = np.random.default_rng(0)
        for fid in ("F5", "F13", "F15", "CEC03", "CEC07"):
            f = get(fid)
            x = f.bounds.lower + f.bounds.span * rng.random(f.dims)
            assert f.evaluate(x) == f.evaluate(x)

    def test_batch_matches_rowwise(self):
        # Rotated CEC functions go through a matmul whose BLAS kernel may
        # round the last bit differently per batch size; everything else is
        # elementwise and must agree exactly.
        rng = np.random.default_rng(1)
        for fid in ALL_IDS:
            f = get(fid)
            X = f.bounds.lower + f.bounds.span * rng.random((5, f.dims))
            if f.noisy:
                batch = f.evaluate_many(X, RngStream(9))
                loop_rng = RngStream(9)
                loop = np.array([f.evaluate(x, loop_rng) for x in X])
            else:
                batch = f.evaluate_many(X)
                loop = np.array([f.evaluate(x) for x in X])
            if fid in (f"CEC{k:02d}" for k in range(4, 11)):
                assert np.allclose(batch, loop, rtol=1e-12, atol=0.0), fid
            else:
                assert np.array_equal(batch, loop), fid

    def test_bounds_honesty(self):
        rng = np.random.default_rng(2)
        for f in registry():
            X = f.bounds.lower + f.bounds.span * rng.random((32, f.dims))
            values = f.evaluate_many(X, RngStream(4) if f.noisy else None)
            assert np.all(np.isfinite(values)), f.function_id


class TestKnownOptima:
    def test_stored_locations_reproduce_optima(self):
        for f in registry():
            if f.optimum_position is None:
                continue
            assert abs(f.evaluate(f.optimum_position) - f.known_optimum) <= 1e-8, f.function_id

    def test_cec_shift_points_hit_documented_minimum(self):
        data = load_cec_data()
        for k in range(4, 11):
            f = get(f"CEC{k:02d}")
            assert abs(f.evaluate(data.shifts[k]) - 1.0) <= 1e-8

    def test_classical_origin_minima(self):
        for fid in ("F1", "F9", "F10", "F11"):
            f = get(fid)
            assert abs(f.evaluate(np.zeros(f.dims)) - 0.0) <= 1e-8

    def test_scalable_override_scales_schwefel_optimum(self):
        f5 = make_classical("F8", dims=5)
        assert abs(f5.evaluate(f5.optimum_position) - f5.known_optimum) <= 1e-8
        assert f5.known_optimum == pytest.approx(-418.9828872724338 * 5)


class TestCecData:
    def test_packaged_data_loads(self):
        data = load_cec_data()
        assert set(data.shifts) == set(range(4, 11))
        for k, shift in data.shifts.items():
            assert shift.shape == (10,)
            assert np.all(np.abs(shift) <= 80.0)
        for k, rotation in data.rotations.items():
            assert rotation.shape == (10, 10)
            assert np.allclose(rotation @ rotation.T, np.eye(10), atol=1e-10)

    def test_reload_is_idempotent(self):
        assert load_cec_data() is load_cec_data()
        again = load_cec_data(data_directory())
        base = load_cec_data()
        assert all(np.array_equal(again.shifts[k], base.shifts[k]) for k in range(4, 11))

    def test_missing_files_listed(self, tmp_path):
        with pytest.raises(CecDataError, match="shift_data_4.txt"):
            load_cec_data(tmp_path)

    def test_truncated_matrix_names_file(self, tmp_path):
        for path in required_files():
            shutil.copy(path, tmp_path / path.name)
        target = tmp_path / "M_6_D10.txt"
        lines = target.read_text().splitlines()
        target.write_text("\n".join(lines[:7]) + "\n")
        with pytest.raises(CecDataError, match="M_6_D10.txt"):
            load_cec_data(tmp_path)

    def test_malformed_number_names_file_and_line(self, tmp_path):
        for path in required_files():
            shutil.copy(path, tmp_path / path.name)
        target = tmp_path / "shift_data_5.txt"
        target.write_text("1.0 2.0 oops 4.0 5.0 6.0 7.0 8.0 9.0 10.0\n")
        with pytest.raises(CecDataError, match=r"shift_data_5.txt:1"):
            load_cec_data(tmp_path)

    def test_wrong_shift_length(self, tmp_path):
        for path in required_files():
            shutil.copy(path, tmp_path / path.name)
        (tmp_path / "shift_data_9.txt").write_text("1.0 2.0 3.0\n")
        with pytest.raises(CecDataError, match="shift_data_9.txt"):
            load_cec_data(tmp_path)


class TestCecValues:
    def test_chebyshev_optimum_value(self):
        # degree-8 polynomial coefficients, leading first
        coeffs = np.array([128, 0, -256, 0, 160, 0, -32, 0, 1], dtype=float)
        assert abs(get("CEC01").evaluate(coeffs) - 1.0) <= 1e-8

    def test_hilbert_inverse_is_optimal(self):
        f = get("CEC02")
        assert abs(f.evaluate(f.optimum_position) - 1.0) <= 1e-8

    def test_lennard_jones_octahedron(self):
        f = get("CEC03")
        assert abs(f.evaluate(f.optimum_position) - 1.0) <= 1e-8

    def test_off_optimum_values_exceed_minimum(self):
        rng = np.random.default_rng(3)
        for fid in CEC_IDS:
            f = get(fid)
            X = f.bounds.lower + f.bounds.span * rng.random((16, f.dims))
            assert np.all(f.evaluate_many(X) >= 1.0 - 1e-9), fid


class TestScalableDims:
    def test_custom_dimension(self):
        f = make_classical("F9", dims=4)
        assert f.dims == 4
        assert f.evaluate(np.zeros(4)) == 0.0

    def test_fixed_function_rejects_dims(self):
        with pytest.raises(ValueError):
            make_classical("F16", dims=5)

    def test_classical_ids_cover_f1_to_f23(self):
        assert CLASSICAL_IDS == tuple(f"F{k}" for k in range(1, 24))
