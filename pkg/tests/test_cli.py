import json
import subprocess
import sys

import pytest

from wheelramsey.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from wheelramsey.graph import Graph, TwoColoring, format_witness, parse_witness


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstructVerify:
    def test_round_trip(self, capsys, tmp_path):
        path = tmp_path / "w.txt"
        code, out, _ = run(capsys, "construct", "--witness", "cycle-wheel", "--m", "3", "--n", "2", "-o", str(path))
        assert code == EXIT_OK and "10 vertices" in out
        coloring, meta = parse_witness(path.read_text())
        assert coloring.n == 10 and meta["claimed_bound"] == "11" and meta["certified"] == "yes"
        code, out, _ = run(capsys, "verify", "--file", str(path), "--red", "C6", "--blue", "W4")
        assert code == EXIT_OK and out.rstrip().endswith("PASS")

    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "construct", "--witness", "matching-fan", "--n", "3")
        assert code == EXIT_OK and out.startswith("ramsey-witness v1")

    def test_wrong_families_fail(self, capsys, tmp_path):
        path = tmp_path / "w.txt"
        run(capsys, "construct", "--witness", "cycle-wheel", "--m", "3", "--n", "2", "-o", str(path))
        code, out, _ = run(capsys, "verify", "--file", str(path), "--red", "C4", "--blue", "W4")
        assert code == EXIT_FAIL and "FOUND" in out

    def test_flipped_edges_never_crash(self, capsys, tmp_path):
        path = tmp_path / "w.txt"
        run(capsys, "construct", "--witness", "cycle-wheel", "--m", "3", "--n", "3", "-o", str(path))
        coloring, _ = parse_witness(path.read_text())
        for u, v in [(0, 1), (0, 6), (3, 9), (5, 8)]:
            rows = list(coloring.red.rows)
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
            bad = tmp_path / f"flip{u}_{v}.txt"
            bad.write_text(format_witness(TwoColoring(Graph(coloring.n, tuple(rows)))))
            code, out, _ = run(capsys, "verify", "--file", str(bad), "--red", "C6", "--blue", "W6")
            assert code in (EXIT_OK, EXIT_FAIL)
            assert out.rstrip().endswith("PASS" if code == EXIT_OK else "FAIL")

    def test_infeasible_parameters(self, capsys):
        code, _, err = run(capsys, "construct", "--witness", "cycle-fan", "--m", "5", "--n", "4")
        assert code == EXIT_USAGE and "error" in err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("ramsey-witness v1\nvertices 3\nred 2 1\n")
        code, _, err = run(capsys, "verify", "--file", str(path), "--red", "C4", "--blue", "C4")
        assert code == EXIT_USAGE and "u < v" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", "--file", str(tmp_path / "none"), "--red", "C4", "--blue", "C4")
        assert code == EXIT_USAGE


class TestValue:
    def test_exact(self, capsys):
        code, out, _ = run(capsys, "value", "--pair", "cycle-cycle", "--m", "3", "--n", "2")
        assert code == EXIT_OK and out.splitlines()[0] == "exact 7"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "value", "--pair", "cycle-wheel", "--m", "4", "--n", "4", "--json")
        d = json.loads(out)
        assert code == EXIT_OK
        assert (d["lower"], d["upper"], d["exactness"]) == (15, 348, "interval")
        assert {"regime", "q", "provenance"} <= d.keys()

    def test_excluded_case(self, capsys):
        code, _, err = run(capsys, "value", "--pair", "cycle-cycle", "--m", "2", "--n", "2")
        assert code == EXIT_USAGE and err

    def test_single_parameter_pair(self, capsys):
        code, out, _ = run(capsys, "value", "--pair", "matching-fan", "--n", "3")
        assert code == EXIT_OK and out.startswith("exact 9")

    def test_m_required(self, capsys):
        code, _, err = run(capsys, "value", "--pair", "star-wheel", "--n", "3")
        assert code == EXIT_USAGE and "--m" in err


class TestTable:
    def test_figure(self, capsys):
        code, out, _ = run(capsys, "table", "--figure", "1", "--n", "60", "--steps", "12")
        rows = out.splitlines()
        assert code == EXIT_OK and rows[0] == "m_over_n,leading_coeff_over_n"

    def test_pair(self, capsys):
        code, out, _ = run(capsys, "table", "--pair", "star-wheel", "--n", "4", "--steps", "8")
        assert code == EXIT_OK and out.startswith("m,n,")

    def test_needs_one_source(self, capsys):
        code, _, _ = run(capsys, "table", "--n", "4", "--steps", "8")
        assert code == EXIT_USAGE


class TestSearch:
    def test_transcript(self, capsys):
        code, out, _ = run(capsys, "search", "--red", "C4", "--blue", "C4", "--nmax", "8")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[5].startswith("N=6 status=none")
        assert lines[-1].startswith("result status=ramsey_value value=6")

    def test_exhausted(self, capsys, monkeypatch):
        monkeypatch.setenv("RAMSEY_NODE_BUDGET", "100")
        code, out, _ = run(capsys, "search", "--red", "C6", "--blue", "C6", "--nmax", "9")
        assert code == EXIT_FAIL and "status=exhausted_budget" in out

    def test_bad_family(self, capsys):
        code, _, _ = run(capsys, "search", "--red", "Q4", "--blue", "C4", "--nmax", "5")
        assert code == EXIT_USAGE


def test_help_and_module_entry():
    proc = subprocess.run([sys.executable, "-m", "wheelramsey", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "construct" in proc.stdout


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE


@pytest.mark.slow
def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert "criteria passed" in out
    assert code == (EXIT_OK if "9/9" in out else EXIT_FAIL)
