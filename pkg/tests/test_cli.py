"""Command-line interface: output formats, schemas, exit codes."""

import csv
import io
import json
from fractions import Fraction

import pytest

from monogamy import cli
from monogamy.extendibility import p_w_complete

from conftest import load_golden


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValue:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "value", "--family", "werner", "--n", "7", "--d", "3")
        assert code == 0
        assert out.startswith("11/21 ")

    def test_json_schema_roundtrip(self, capsys):
        code, out, _ = run_cli(
            capsys, "value", "--family", "brauer", "--n", "5", "--d", "3", "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj == {
            "family": "brauer",
            "n": 5,
            "d": 3,
            "value": {"num": 7, "den": 15},
            "method": "closed_form",
        }
        restored = cli.value_from_json(obj)
        assert restored.value == Fraction(7, 15)
        assert cli.value_to_json(restored) == obj

    def test_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "value", "--family", "isotropic-prime", "--n", "4", "--d", "2",
            "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["family", "n", "d", "value", "decimal", "method"]
        assert rows[1][3] == "1/3"

    def test_bipartite(self, capsys):
        code, out, _ = run_cli(
            capsys, "value", "--family", "isotropic-bipartite", "--n", "2", "--d", "2", "--m", "3"
        )
        assert code == 0
        assert out.startswith("2/3 ")

    def test_usage_error_bad_n(self, capsys):
        code, _, err = run_cli(capsys, "value", "--family", "werner", "--n", "1", "--d", "2")
        assert code == 2
        assert "error" in err


class TestTable:
    @pytest.mark.parametrize(
        "family,golden",
        [
            ("werner", "werner"),
            ("brauer", "brauer"),
            ("isotropic-prime", "isotropic_prime"),
            ("isotropic", "isotropic"),
        ],
    )
    def test_csv_matches_golden(self, capsys, family, golden):
        code, out, _ = run_cli(
            capsys, "table", "--family", family, "--max", "9", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        ns = [int(x) for x in rows[0][1:]]
        cells = {}
        for row in rows[1:]:
            d = int(row[0])
            for n, val in zip(ns, row[1:]):
                cells[(n, d)] = Fraction(val)
        assert cells == load_golden(golden)

    def test_json_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--family", "werner", "--max", "3", "--format", "json"
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 4
        by_key = {(r["n"], r["d"]): Fraction(r["value"]["num"], r["value"]["den"]) for r in rows}
        assert by_key[(3, 2)] == p_w_complete(3, 2)


class TestSpectrum:
    def test_jm_sym(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--what", "jm-sym", "--n", "2", "--d", "2", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["eigenvalue", "multiplicity"]
        pairs = [(round(float(v)), int(m)) for v, m in rows[1:]]
        assert pairs == [(-1, 1), (1, 3)]

    def test_werner_hamiltonian_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--what", "werner", "--n", "3", "--d", "2", "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        assert max(obj["eigenvalues"]) == pytest.approx(float(p_w_complete(3, 2)), abs=1e-9)
        assert sum(obj["multiplicities"]) == 8


class TestMatchings:
    def test_count(self, capsys):
        code, out, _ = run_cli(capsys, "matchings", "--complete", "6", "--count")
        assert code == 0
        assert out.strip() == "15"

    def test_listing(self, capsys):
        code, out, _ = run_cli(capsys, "matchings", "--complete", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "total 3"
        assert "(0,1) (2,3)" in lines

    def test_graph_file(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text('{"n": 4, "edges": [[0, 1], [2, 3]], "family": "custom"}')
        code, out, _ = run_cli(capsys, "matchings", "--graph", str(path), "--count")
        assert code == 0
        assert out.strip() == "1"


class TestPptRegion:
    def test_separable(self, capsys):
        code, out, _ = run_cli(capsys, "ppt-region", "--p", "1/2", "--q", "1/2", "--d", "2")
        assert code == 0
        assert out.startswith("separable")
        assert "ppt=yes" in out

    def test_entangled(self, capsys):
        code, out, _ = run_cli(capsys, "ppt-region", "--p", "1", "--q", "0", "--d", "2")
        assert code == 0
        assert out.startswith("entangled")
        assert "ppt=no" in out

    def test_prime_parameterization(self, capsys):
        code, out, _ = run_cli(
            capsys, "ppt-region", "--p", "0", "--q", "0", "--d", "3", "--prime"
        )
        assert code == 0
        assert out.startswith("separable")

    def test_invalid_state(self, capsys):
        code, out, _ = run_cli(capsys, "ppt-region", "--p", "2", "--q", "0", "--d", "2")
        assert code == 0
        assert out.startswith("invalid")


class TestDualScan:
    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "dual-scan", "--n", "3", "--d", "2", "--points", "5", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["x", "lambda_max"]
        assert len(rows) == 6

    def test_budget_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "dual-scan", "--n", "7", "--d", "4")
        assert code == 3
        assert "error" in err

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("MONOGAMY_BUDGET", "16")
        code, _, _ = run_cli(capsys, "dual-scan", "--n", "3", "--d", "3")
        assert code == 3
        monkeypatch.setenv("MONOGAMY_BUDGET", "64")
        code, _, _ = run_cli(capsys, "dual-scan", "--n", "3", "--d", "3", "--points", "3")
        assert code == 0


class TestCycle:
    def test_output(self, capsys):
        code, out, _ = run_cli(capsys, "cycle", "--max", "6")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("C_4: 0.75")
        assert lines[-1].startswith("ln(2) limit: 0.6931")


class TestVerify:
    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli.checks, "run_all", lambda budget=None: iter([("stub", False, "boom")])
        )
        code, out, _ = run_cli(capsys, "verify", "--all")
        assert code == 1
        assert "FAIL stub" in out

    def test_success_output_shape(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli.checks,
            "run_all",
            lambda budget=None: iter([("a", True, "ok"), ("b", True, "ok")]),
        )
        code, out, _ = run_cli(capsys, "verify", "--all")
        assert code == 0
        assert out.count("PASS") == 2
        assert out.strip().endswith("(0 failing checks)")
