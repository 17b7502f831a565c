"""End-to-end CLI tests driven through main(argv)."""

import json

import pytest

from linesurf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariants:
    def test_catalog_json(self, capsys):
        code, out, _ = run(capsys, "invariants", "--catalog", "hesse", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["k2_bar"] == 768 and report["chi_bar"] == 201
        assert report["c1_sq"] == 336 and report["c2"] == 360
        assert report["chern_ratio"] == "14/15"
        assert report["hodge"] == {"q": 3, "pg": 60, "h11": 250}
        assert report["verdict"]["general_type"] == "Yes"

    def test_profile_flags(self, capsys):
        code, out, _ = run(capsys, "invariants", "--profile", "--d", "6",
                           "--t", "2=3", "--t", "3=4", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["c1_sq"] == 0 and report["c2"] == 36
        assert report["hodge"] is None

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text("1 0 0\n0 1 0\n0 0 1\n")
        code, out, _ = run(capsys, "invariants", "--input", str(path), "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["input"]["d"] == 3
        assert report["input"]["t"] == {"2": 3}

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "invariants", "--catalog", "braid", "--n", "5",
                         "--format", "json")
        _, out2, _ = run(capsys, "invariants", "--catalog", "braid", "--n", "5",
                         "--format", "json")
        assert out1 == out2

    def test_q_override_warns(self, capsys):
        code, out, err = run(capsys, "invariants", "--catalog", "hesse",
                             "--q", "2", "--format", "json")
        assert code == 0
        assert "overrides" in err
        assert json.loads(out)["hodge"]["q"] == 2

    def test_table_format(self, capsys):
        code, out, _ = run(capsys, "invariants", "--catalog", "ceva", "--m", "3")
        assert code == 0
        assert "my_tilde" in out and "verdict:" in out

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "invariants", "--format", "json")
        assert code == 2 and "exactly one" in err
        code, _, err = run(capsys, "invariants", "--catalog", "hesse",
                           "--profile", "--d", "3")
        assert code == 2

    def test_unbalanced_profile_rejected(self, capsys):
        code, _, err = run(capsys, "invariants", "--profile", "--d", "5", "--t", "2=3")
        assert code == 2 and "UnbalancedProfile" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "invariants", "--input", "/nonexistent/zzz")
        assert code == 2


class TestGraph:
    def test_summary(self, capsys):
        code, out, _ = run(capsys, "graph", "--r", "3", "--d", "5")
        assert code == 0
        assert "shape: star" in out and "vertices: 7" in out

    def test_dot_file(self, capsys, tmp_path):
        target = tmp_path / "graph.dot"
        code, out, _ = run(capsys, "graph", "--r", "3", "--d", "7",
                           "--dot", str(target))
        assert code == 0
        text = target.read_text()
        assert text.startswith('graph "resolution_r3_d7"')
        assert "a1_1 -- a2_1;" in text

    def test_bad_parameters(self, capsys):
        code, _, err = run(capsys, "graph", "--r", "9", "--d", "4")
        assert code == 2 and "BadMultiplicity" in err


class TestLocal:
    def test_quadruple(self, capsys):
        code, out, _ = run(capsys, "local", "--r", "3", "--d", "5")
        assert code == 0
        payload = json.loads(out)
        assert (payload["dci"], payload["dcii"]) == (-3, 7)
        assert payload["coefficients"] == [-3, -2, -1]


class TestVerify:
    def test_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--r-max", "4", "--d-max", "15")
        assert code == 0
        assert "all" in out and "match" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "verify", "--r-max", "3", "--d-max", "4", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["mismatches"] == 0
        assert payload["pairs"] == len(payload["reports"])

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "verify", "--r-max", "1", "--d-max", "5")
        assert code == 2 and "BadParameter" in err


class TestCatalogCommand:
    def test_lists_entries(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        for name in ("hesse", "ceva", "braid", "pencil", "near-pencil", "generic"):
            assert name in out
