import hashlib
import json
import math
import re

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CAPTION
from tammes10.cli import main
from tammes10.construction import Configuration
from tammes10.document import dumps, loads
from tammes10.errors import DocumentError
from tammes10.render import project, view_basis


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def marker_positions(svg):
    found = re.findall(r'<circle id="M(\d+)" cx="([-\d.]+)" cy="([-\d.]+)"', svg)
    return {int(i): (float(x), float(y)) for i, x, y in found}


class TestSolve:
    def test_default(self, capsys):
        code, out, _ = run(capsys, "solve")
        assert code == 0
        assert "1.154479833419270" in out
        assert "danzer_interval: PASS" in out

    def test_bad_bracket(self, capsys):
        code, _, err = run(capsys, "solve", "--bracket", "1.16,1.3")
        assert code == 2 and "sign" in err

    def test_loose_tolerance(self, capsys):
        _, tight, _ = run(capsys, "solve")
        _, loose, _ = run(capsys, "solve", "--tol", "1e-6")
        root = lambda text: float(re.search(r"root: (\S+)", text).group(1))
        assert round(root(tight), 6) == round(root(loose), 6)

    def test_malformed_flag(self, capsys):
        code, _, _ = run(capsys, "solve", "--bracket", "nope")
        assert code == 2


class TestBuild:
    def test_solve(self, capsys):
        code, out, _ = run(capsys, "build", "--r", "solve")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == "1" and doc["method"] == "sequential-covering"
        assert doc["n"] == len(doc["centers"]) == 10
        np.testing.assert_allclose(doc["centers"], CAPTION, atol=5e-5)

    def test_outside_window(self, capsys):
        code, _, err = run(capsys, "build", "--r", "0.5")
        assert code == 2 and "window" in err

    def test_non_optimal_radius(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        assert run(capsys, "build", "--r", "1.10", "--out", str(path))[0] == 0
        config = loads(path.read_text())
        assert config.n == 10 and config.r == 1.10

    def test_bad_radius_text(self, capsys):
        assert run(capsys, "build", "--r", "big")[0] == 2

    def test_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "build", "--out", str(a))
        run(capsys, "build", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_solve(self, capsys):
        code, out, _ = run(capsys, "verify", "--r", "solve")
        report = json.loads(out)
        assert code == 0
        assert report["min_pair_distance"] == pytest.approx(1.15448, abs=1e-5)

    def test_build_then_verify(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        run(capsys, "build", "--r", "solve", "--out", str(path))
        assert run(capsys, "verify", "--in", str(path))[0] == 0

    def test_missing_center(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        run(capsys, "build", "--out", str(path))
        doc = json.loads(path.read_text())
        del doc["centers"][9]
        doc["n"] = 9
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", "--in", str(path))
        report = json.loads(out)
        assert code == 1
        assert not report["covering_ok"] and report["packing_ok"]
        # the uncovered point is where M10 used to be
        np.testing.assert_allclose(report["worst_vertex"], CAPTION[9], atol=5e-5)

    def test_truncated_json(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        run(capsys, "build", "--out", str(path))
        path.write_text(path.read_text()[:100])
        assert run(capsys, "verify", "--in", str(path))[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "verify", "--in", str(tmp_path / "nope.json"))[0] == 2


class TestRender:
    def test_m1_at_canvas_center(self, capsys):
        code, svg, _ = run(capsys, "render", "--r", "solve", "--view", "0,0,10")
        assert code == 0 and svg.startswith("<?xml")
        assert marker_positions(svg)[1] == (500.0, 500.0)
        assert svg.count("<polyline") >= 10

    def test_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "render", "--out", str(a))
        run(capsys, "render", "--out", str(b))
        assert hashlib.sha256(a.read_bytes()).digest() == hashlib.sha256(b.read_bytes()).digest()

    def test_opposite_view_is_mirror(self, capsys):
        _, top, _ = run(capsys, "render", "--view", "0,0,10")
        _, bottom, _ = run(capsys, "render", "--view", "0,0,-10")
        top, bottom = marker_positions(top), marker_positions(bottom)
        # oracle: project the caption coordinates directly
        caption = CAPTION / np.linalg.norm(CAPTION, axis=1, keepdims=True)
        expected = np.column_stack([500 + 480 * caption[:, 0], 500 + 480 * caption[:, 1]])
        for i in range(1, 11):
            assert bottom[i][0] == pytest.approx(top[i][0], abs=1e-3)
            assert bottom[i][1] == pytest.approx(1000 - top[i][1], abs=1e-3)
            np.testing.assert_allclose(bottom[i], expected[i - 1], atol=0.05)

    def test_view_magnitude_ignored(self, capsys):
        _, a, _ = run(capsys, "render", "--view", "0,0,10")
        _, b, _ = run(capsys, "render", "--view", "0,0,1")
        assert a == b

    def test_half_caps(self, capsys):
        _, full, _ = run(capsys, "render")
        _, half, _ = run(capsys, "render", "--half-caps")
        assert full != half
        assert marker_positions(full) == marker_positions(half)

    def test_hidden_segments_dashed(self, capsys):
        _, svg, _ = run(capsys, "render")
        assert "stroke-dasharray" in svg

    def test_infeasible(self, capsys):
        assert run(capsys, "render", "--r", "0.5")[0] == 2

    @pytest.mark.parametrize("view", [(1, 0, 0), (0, 1, 0), (1, 2, 3), (0, 0, -1)])
    def test_basis_is_right_handed(self, view):
        e1, e2, w = view_basis(view)
        np.testing.assert_allclose(np.cross(e1, e2), w, atol=1e-15)

    def test_project_pole(self):
        np.testing.assert_allclose(project([(0, 0, 1)]), [(500, 500)])


unit_vectors = st.tuples(
    st.floats(-1, 1, allow_nan=False), st.floats(-1, 1, allow_nan=False), st.floats(-1, 1, allow_nan=False)
).filter(lambda v: np.linalg.norm(v) > 0.1)


class TestDocument:
    def test_round_trip_r10(self, config):
        back = loads(dumps(config))
        assert back == config
        assert [c.hex() for p in back.centers for c in p] == [c.hex() for p in config.centers for c in p]

    @given(st.lists(unit_vectors, min_size=1, max_size=12), st.floats(0.01, 3.0))
    def test_round_trip_bit_exact(self, vectors, r):
        centers = tuple(tuple(np.asarray(v) / np.linalg.norm(v)) for v in vectors)
        config = Configuration(len(centers), r, centers)
        back = loads(dumps(config))
        assert back.r == config.r and back.centers == config.centers

    def test_report_embedded(self, config):
        doc = json.loads(dumps(config, report={"packing_ok": True}))
        assert doc["report"] == {"packing_ok": True}

    @pytest.mark.parametrize(
        "mutate",
        [
            lambda d: d.pop("centers"),
            lambda d: d.update(schema_version="2"),
            lambda d: d.update(n=3),
            lambda d: d.update(n=True),
            lambda d: d.update(r="x"),
            lambda d: d["centers"].__setitem__(0, [0, 0, 2]),
            lambda d: d["centers"].__setitem__(0, [0, 0]),
        ],
    )
    def test_schema_errors(self, config, mutate):
        doc = json.loads(dumps(config))
        mutate(doc)
        with pytest.raises(DocumentError):
            loads(json.dumps(doc))

    def test_not_an_object(self):
        with pytest.raises(DocumentError):
            loads("[1, 2]")
