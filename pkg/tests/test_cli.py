"""Command-line interface: formats, exit codes, determinism, schemas."""

import json
import subprocess
import sys

import jsonschema
import pytest

from stcx.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, report_schemas


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_pmax37_matches_fixture(self, capsys):
        code, out, err = run_cli(capsys, "table", "--pmax", "37")
        assert code == EXIT_OK
        assert err == ""
        lines = out.strip().split("\n")
        assert lines[0] == "p,dim_st,dim_st_det,h1_top"
        assert lines[1] == "2,1,0,1"
        assert lines[-1] == "37,3,2,5"
        assert len(lines) == 13

    def test_pmax2_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--pmax", "2")
        assert code == EXIT_OK
        assert out == "p,dim_st,dim_st_det,h1_top\n2,1,0,1\n"

    def test_json_format_schema_valid(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--pmax", "37", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        jsonschema.validate(data, report_schemas()["table"])
        assert data[0] == {
            "p": 2,
            "n": 2,
            "dim_trivial": 1,
            "dim_det": 0,
            "dim_top_cohomology": 1,
        }

    def test_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--pmax", "5", "--format", "text")
        assert code == EXIT_OK
        assert "dim_st" in out.splitlines()[0]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out, _ = run_cli(capsys, "table", "--pmax", "7", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text().startswith("p,dim_st,dim_st_det,h1_top\n")

    def test_pmax_guards(self, capsys):
        assert run_cli(capsys, "table", "--pmax", "1")[0] == EXIT_USAGE
        assert run_cli(capsys, "table", "--pmax", "101")[0] == EXIT_USAGE


class TestCoinv:
    def test_nonvanishing_flag(self, capsys):
        code, out, _ = run_cli(capsys, "coinv", "--p", "11", "--n", "3")
        assert code == EXIT_OK
        data = json.loads(out)
        jsonschema.validate(data, report_schemas()["coinvariant_report"])
        assert data["flag"] == "nonvanishing"
        assert data["dim_trivial"] >= 1

    def test_vanishing_no_flag(self, capsys):
        code, out, _ = run_cli(capsys, "coinv", "--p", "5", "--n", "3")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["dim_top_cohomology"] == 0
        assert "flag" not in data

    def test_single_twist(self, capsys):
        code, out, _ = run_cli(capsys, "coinv", "--p", "13", "--n", "2",
                               "--twist", "trivial")
        assert code == EXIT_OK
        data = json.loads(out)
        jsonschema.validate(data, report_schemas()["coinvariant_query"])
        assert data["dim"] == 1

    def test_guard_exit(self, capsys):
        code, _, err = run_cli(capsys, "coinv", "--p", "9", "--n", "2")
        assert code == EXIT_USAGE
        assert "error" in err


class TestHomologyAndTits:
    def test_homology_report(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--p", "7", "--n", "3",
                               "--family", "frames")
        assert code == EXIT_OK
        data = json.loads(out)
        jsonschema.validate(data, report_schemas()["betti_report"])
        assert data["betti"] == {"0": 0, "1": 0, "2": 1}

    def test_homology_det(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--p", "3", "--n", "2",
                               "--family", "augmented", "--twist", "det")
        assert code == EXIT_OK
        assert json.loads(out)["twist"] == "det"

    def test_tits_acyclic(self, capsys):
        code, out, _ = run_cli(capsys, "tits", "--n", "4")
        assert code == EXIT_OK
        data = json.loads(out)
        assert all(v == 0 for v in data["betti"].values())

    def test_tits_guard(self, capsys):
        assert run_cli(capsys, "tits", "--n", "1")[0] == EXIT_USAGE


class TestVerify:
    def test_paper_table_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "paper-table")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[-1] == "12/12 checks passed"
        assert all(line.startswith("PASS") for line in lines[:-1])

    def test_threads_flag(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "oracle",
                               "--threads", "2")
        assert code == EXIT_OK

    def test_env_threads(self, capsys, monkeypatch):
        monkeypatch.setenv("STCX_THREADS", "3")
        code, out, _ = run_cli(capsys, "verify", "--suite", "paper-table")
        assert code == EXIT_OK

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "--suite", "oracle")
        _, second, _ = run_cli(capsys, "verify", "--suite", "oracle")
        assert first == second

    def test_unknown_suite_usage_exit(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "everything"])
        assert exc.value.code == EXIT_USAGE


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "stcx", "table", "--pmax", "7"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_OK
        assert proc.stdout.startswith("p,dim_st,dim_st_det,h1_top\n")

    def test_unknown_command_usage_exit(self):
        proc = subprocess.run(
            [sys.executable, "-m", "stcx", "frobnicate"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_USAGE
