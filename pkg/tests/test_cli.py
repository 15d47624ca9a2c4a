"""Command line interface: exit codes, output formats, determinism."""

import json
import subprocess
import sys

import pytest

from hopfmonad import zoo
from hopfmonad.cli import main
from hopfmonad.exactla import FieldSpec


def run_cli(args):
    return subprocess.run([sys.executable, "-m", "hopfmonad.cli", *args],
                          capture_output=True, text=True)


@pytest.fixture(scope="module")
def sweedler_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pres") / "sweedler.json"
    path.write_text(json.dumps(zoo.build_sweedler(FieldSpec.rationals())))
    return str(path)


class TestExitCodes:
    def test_pass_is_zero(self, sweedler_file, capsys):
        assert main(["verify", sweedler_file]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out.replace("PASS", "")

    def test_axiom_failure_is_one(self, tmp_path, capsys):
        pres = zoo.build_sweedler(FieldSpec.rationals())
        pres["t0"] = ["1", "1", "1", "0"]  # corrupted counit
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(pres))
        assert main(["verify", str(path), "--checks", "axioms"]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out

    def test_schema_error_is_two(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"schema": 1}))
        result = run_cli(["verify", str(path)])
        assert result.returncode == 2
        assert "input error" in result.stderr

    def test_unreadable_file_is_two(self):
        assert run_cli(["verify", "/nonexistent.json"]).returncode == 2


class TestOutputs:
    def test_json_structure(self, sweedler_file, capsys):
        main(["verify", sweedler_file, "--json", "--checks", "axioms"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["name"] == "sweedler"
        assert payload["passed"] is True
        assert all({"check", "status"} <= set(c) for c in payload["checks"])

    def test_failure_carries_witness(self, tmp_path, capsys):
        pres = zoo.build_sweedler(FieldSpec.rationals())
        pres["mul"][1][1][0] = "0"  # g*g no longer the identity
        path = tmp_path / "mut.json"
        path.write_text(json.dumps(pres))
        main(["verify", str(path), "--json", "--checks", "axioms"])
        payload = json.loads(capsys.readouterr().out)
        bad = [c for c in payload["checks"] if c["status"] == "fail"]
        assert bad and "witness" in bad[0] and "blocks" in bad[0]["witness"]

    def test_builtin_example_names(self, capsys):
        assert main(["maschke", "ks3"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out

    def test_example_subcommand(self, tmp_path):
        out = tmp_path / "kz2.json"
        assert main(["example", "kz2", "-o", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["name"] == "kz2"

    def test_drinfeld_reports_element(self, capsys):
        assert main(["drinfeld", "double_z2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        # u = sum over group elements of (indicator g) ⊗ g^{-1}
        assert payload["info"]["drinfeld_element"] == ["1", "0", "0", "1"]


class TestDeterminism:
    def test_reports_byte_identical(self, sweedler_file):
        a = run_cli(["report", sweedler_file, "--json"])
        b = run_cli(["report", sweedler_file, "--json"])
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_seed_is_recorded(self, sweedler_file, capsys):
        main(["report", sweedler_file, "--json", "--seed", "7"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["info"]["seed"] == 7
