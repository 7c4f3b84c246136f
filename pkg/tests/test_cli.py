import csv
import io
import json
import subprocess
import sys

import pytest

from goldens import DEGREE2_COLUMNS, DEGREE2_MATRIX, DEGREE4_COLUMNS, DEGREE4_GRID, DEGREE4_ROWS
from hyperinv.cli import main
from hyperinv.formats import polynomial_to_json
from hyperinv.monomials import Shape, enumerate_eps_arrays
from hyperinv.polynomial import Polynomial, cayley_hyperdeterminant, determinant


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBasis:
    def test_degree4(self, capsys):
        code, out, _ = run(capsys, "basis", "--shape", "2,2,2", "--degree", "4", "--weight", "0,0,0")
        assert code == 0 and out.split() == DEGREE4_COLUMNS

    def test_odd_degree_empty(self, capsys):
        code, out, _ = run(capsys, "basis", "--shape", "2,2,2", "--degree", "3", "--weight", "0,0,0")
        assert code == 0 and out == ""

    def test_grouped_weight(self, capsys):
        code, out, _ = run(capsys, "basis", "--shape", "2,3", "--degree", "6", "--weight", "0;0,0", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["monomials"] == enumerate_eps_arrays(Shape((2, 3)), 6).labels()
        assert data["weight"] == [[0], [0, 0]]

    def test_bad_weight(self, capsys):
        code, _, err = run(capsys, "basis", "--shape", "2,3", "--degree", "6", "--weight", "0;0")
        assert code == 2 and "error" in err

    def test_bad_shape(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["basis", "--shape", "2,x", "--degree", "2"])
        assert exc.value.code == 2


class TestMatrix:
    def test_grid_degree4(self, capsys):
        code, out, _ = run(capsys, "matrix", "--shape", "2,2,2", "--degree", "4")
        assert code == 0
        lines = out.splitlines()
        body = [ln for ln in lines if not ln.startswith("-")]
        rules = [i for i, ln in enumerate(lines) if ln.startswith("-")]
        assert rules == [8, 17]
        assert [ln[:8] for ln in body] == DEGREE4_ROWS
        assert "\n".join(ln[10:] for ln in body) == DEGREE4_GRID

    def test_degree2_csv(self, capsys):
        code, out, _ = run(capsys, "matrix", "--shape", "2,2,2", "--degree", "2", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0][1:] == DEGREE2_COLUMNS
        assert [[int(x) for x in r[1:]] for r in rows[1:]] == DEGREE2_MATRIX

    def test_json(self, capsys):
        code, out, _ = run(capsys, "matrix", "--shape", "2,2,2", "--degree", "2", "--format", "json")
        data = json.loads(out)
        assert [b["generator"] for b in data["blocks"]] == ["E1", "E2", "E3"]
        assert [b["rows"] for b in data["blocks"]] == [2, 2, 2]

    def test_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("HYPERINV_COLUMN_CAP", "3")
        code, _, err = run(capsys, "matrix", "--shape", "2,2,2", "--degree", "4")
        assert code == 3 and "cap" in err


class TestInvariants:
    def test_text_layout(self, capsys):
        code, out, _ = run(capsys, "invariants", "--shape", "2,2,2", "--degree", "4")
        lines = out.splitlines()
        assert code == 0
        assert "kernel dim 1" in lines[0]
        assert lines[3:7] == ["x000^2 x111^2", "  + x001^2 x110^2", "  + x010^2 x101^2", "  + x011^2 x100^2"]
        assert lines[-1] == "  + 4 (x000 x011 x101 x110 + x001 x010 x100 x111)"

    def test_json_deterministic(self, capsys):
        argv = ["invariants", "--shape", "2,2,2", "--degree", "4", "--format", "json"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv, "--method", "bareiss")
        assert first == second
        data = json.loads(first)
        assert data["kernel_dim"] == 1 and "timings" not in data

    def test_cap_exit(self, capsys):
        code, _, _ = run(capsys, "invariants", "--shape", "2,2,2", "--degree", "8", "--cap", "10")
        assert code == 3

    def test_negative_degree(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["invariants", "--shape", "2,2", "--degree", "-1"])
        assert exc.value.code == 2


class TestTables:
    def test_dims_check(self, capsys):
        code, out, _ = run(capsys, "dims", "--degree-range", "0..12", "--check", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["all_equal"] and len(data["rows"]) == 13

    def test_dims_general_shape(self, capsys):
        code, out, _ = run(capsys, "dims", "--shape", "2,3", "--degree-range", "0..12", "--check")
        assert code == 0 and out.rstrip().endswith("all equal")

    def test_bad_range(self, capsys):
        with pytest.raises(SystemExit):
            main(["dims", "--degree-range", "a..b"])

    def test_altsum(self, capsys):
        code, out, _ = run(capsys, "altsum", "--degree-range", "2..12", "--kernel", "--format", "json")
        rows = json.loads(out)["rows"]
        assert code == 0
        assert all(r["altsum"] == r["kernel_dim"] for r in rows)
        assert [r["altsum"] for r in rows] == [0, 1, 0, 1, 0, 1]

    def test_conjecture(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--shape", "2,2,2", "--max-degree", "40", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["status"] == "consistent" and data["period"] == 4


class TestVerify:
    def write(self, tmp_path, p):
        path = tmp_path / "p.json"
        path.write_text(polynomial_to_json(p))
        return str(path)

    @pytest.mark.parametrize("p", [cayley_hyperdeterminant(), determinant(3)], ids=["C", "det3"])
    def test_true(self, capsys, tmp_path, p):
        code, out, _ = run(capsys, "verify", "--poly", self.write(tmp_path, p))
        assert code == 0 and out.rstrip().endswith("invariant")

    def test_false(self, capsys, tmp_path):
        p = Polynomial.variable(Shape((2, 2, 2)), (1, 1, 1))
        code, out, _ = run(capsys, "verify", "--poly", self.write(tmp_path, p), "--format", "json")
        data = json.loads(out)
        assert code == 1 and not data["invariant"] and data["lie"]["witness"] == "F1"

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", "--poly", str(tmp_path / "nope.json"))
        assert code == 2


class TestSubspaceCheck:
    def test_cube(self, capsys):
        code, out, _ = run(capsys, "subspace-check", "--degree", "4", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["equality"] and data["commutes"] and data["injective"]

    def test_lines(self, capsys, tmp_path):
        path = tmp_path / "lines.json"
        path.write_text(json.dumps({"ambient_dim": 2, "subspaces": [[[1, 0]], [[0, 1]], [[1, 1]]]}))
        code, out, _ = run(capsys, "subspace-check", "--input", str(path), "--format", "json")
        data = json.loads(out)
        assert code == 0 and (data["lhs"], data["rhs"], data["equality"]) == (2, 3, False)

    def test_bad_input(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{}")
        code, _, _ = run(capsys, "subspace-check", "--input", str(path))
        assert code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "hyperinv", "basis", "--shape", "2,2", "--degree", "2"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.split() == ["0110", "1001"]
