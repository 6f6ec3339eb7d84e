import json
import subprocess
import sys

import pytest

from curvesys.cli import main
from curvesys.io import read_system


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def polygon3(tmp_path, capsys):
    path = tmp_path / "poly.json"
    assert run(capsys, "generate", "polygon", "--genus", "3", "--out", str(path))[0] == 0
    return path


class TestGenerate:
    def test_polygon_report(self, tmp_path, capsys):
        code, out, _ = run(capsys, "generate", "polygon", "--genus", "3", "--out", str(tmp_path / "p.json"))
        assert code == 0
        assert "N=7, upper bound 126" in out

    def test_closed_lower_report(self, tmp_path, capsys):
        code, out, _ = run(capsys, "generate", "closed-lower", "--genus", "4", "--out", str(tmp_path / "c.json"))
        assert code == 0
        assert "N=27, upper bound 765; 27 ≥ 26 required" in out

    def test_stdout_is_json(self, capsys):
        code, out, err = run(capsys, "generate", "boundary", "--genus", "1", "--boundary", "2")
        assert code == 0 and "N=6" in err
        assert len(json.loads(out)["curves"]) == 6

    def test_byte_stable(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for p in (a, b):
            run(capsys, "generate", "hyperelliptic", "--genus", "3", "--out", str(p))
        assert a.read_bytes() == b.read_bytes()

    def test_canonical_vectors(self, capsys):
        code, out, _ = run(capsys, "generate", "canonical-vectors", "--genus", "2")
        assert code == 0
        assert out.split()[:5] == ["1100", "0100", "1010", "1001", "1011"]

    def test_boundary_flag_on_closed_kind(self, capsys):
        assert run(capsys, "generate", "polygon", "--genus", "2", "--boundary", "1")[0] == 2

    def test_bad_genus(self, capsys):
        code, _, err = run(capsys, "generate", "closed-lower", "--genus", "3")
        assert code == 2 and "error" in err


class TestVerify:
    def test_pipeline(self, polygon3, capsys):
        code, out, _ = run(capsys, "verify", str(polygon3))
        assert code == 0 and "overall: PASS" in out

    def test_json_output(self, polygon3, capsys):
        code, out, _ = run(capsys, "verify", str(polygon3), "--json")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_hand_edited_count(self, polygon3, capsys):
        doc = json.loads(polygon3.read_text())
        doc["intersections"][0][2] = 2
        polygon3.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", str(polygon3))
        assert code == 1
        assert "[FAIL] k-bound" in out and "[FAIL] homology-parity" in out
        assert "('v01', 'v02', 2)" in out or "['v01', 'v02', 2]" in out

    def test_k_override(self, polygon3, capsys):
        doc = json.loads(polygon3.read_text())
        doc["intersections"][0][2] = 3
        polygon3.write_text(json.dumps(doc))
        assert run(capsys, "verify", str(polygon3))[0] == 1
        code, out, _ = run(capsys, "verify", str(polygon3), "--k", "3")
        assert code == 0 and "[PASS] k-bound" in out

    def test_missing_class(self, polygon3, capsys):
        doc = json.loads(polygon3.read_text())
        del doc["curves"][2]["class"]
        polygon3.write_text(json.dumps(doc))
        code, _, err = run(capsys, "verify", str(polygon3))
        assert code == 2
        assert err.startswith("format error at $.curves[2]")

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "verify", str(tmp_path / "nope.json"))[0] == 2

    def test_file_left_intact_on_reread(self, polygon3, capsys):
        before = polygon3.read_bytes()
        run(capsys, "verify", str(polygon3))
        assert polygon3.read_bytes() == before


class TestSearch:
    def test_torus(self, capsys):
        code, out, _ = run(capsys, "search", "torus", "--k", "1", "--bound", "6")
        assert code == 0 and out.startswith("max 3")

    def test_torus_json(self, capsys):
        code, out, _ = run(capsys, "search", "torus", "--k", "3", "--bound", "4", "--json")
        payload = json.loads(out)
        assert code == 0 and payload["max"] == 6 and payload["agrees"]

    def test_genus2(self, capsys):
        code, out, _ = run(capsys, "search", "genus2")
        assert code == 0 and "max edges 12; 2 isomorphism classes" in out

    @pytest.mark.parametrize("flag", [[], ["--certified"]])
    def test_gf2(self, capsys, flag):
        code, out, _ = run(capsys, "search", "gf2", "--genus", "2", *flag)
        assert code == 0 and "max family 5" in out

    def test_bad_k(self, capsys):
        assert run(capsys, "search", "torus", "--k", "0")[0] == 2


class TestBounds:
    @pytest.mark.parametrize(
        "argv, line",
        [
            (["--genus", "2"], "N(1,2) = 12 (exact)"),
            (["--genus", "4"], "26 ≤ N(1,4) ≤ 765"),
            (["--genus", "2", "--boundary", "1"], "10 ≤ N(1,2,1) ≤ 17"),
        ],
    )
    def test_text(self, capsys, argv, line):
        code, out, _ = run(capsys, "bounds", *argv)
        assert code == 0 and out.splitlines()[0] == line

    def test_json(self, capsys):
        code, out, _ = run(capsys, "bounds", "--genus", "3", "--json")
        assert json.loads(out)["upper"] == 126

    def test_unsupported_k(self, capsys):
        assert run(capsys, "bounds", "--genus", "3", "--k", "2")[0] == 2


class TestExportDot:
    def test_polygon_odd_is_complete(self, tmp_path, capsys):
        src = tmp_path / "p.json"
        run(capsys, "generate", "polygon", "--genus", "2", "--out", str(src))
        code, out, _ = run(capsys, "export-dot", str(src), "--flavor", "odd")
        assert code == 0
        assert out.startswith("graph G_odd {") and out.count(" -- ") == 10

    def test_edgeless_zero_system(self, tmp_path, capsys):
        doc = {"genus": 2, "boundary": 0, "k": 0,
               "curves": [{"id": "a", "class": "1000"}, {"id": "b", "class": "0010"}],
               "intersections": []}
        src = tmp_path / "z.json"
        src.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "export-dot", str(src))
        assert code == 0 and " -- " not in out and out.count(";") == 2

    def test_octahedron_lift(self, tmp_path, capsys):
        from curvesys.io import write_system
        from curvesys.quotient import graph_to_system, octahedron

        src, dot = tmp_path / "o.json", tmp_path / "o.dot"
        write_system(graph_to_system(octahedron()), src)
        assert run(capsys, "export-dot", str(src), "--out", str(dot))[0] == 0
        text = dot.read_text()
        # 12 curves, each meeting the 6 others that share an endpoint
        assert text.count(" -- ") == 36
        assert sum(1 for line in text.splitlines() if line.strip().endswith('";') and " -- " not in line) == 12

    def test_bad_flavor(self, polygon3, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["export-dot", str(polygon3), "--flavor", "even"])
        assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "curvesys", "bounds", "--genus", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "12" in proc.stdout


def test_generated_file_round_trips(polygon3):
    assert len(read_system(polygon3)) == 7
