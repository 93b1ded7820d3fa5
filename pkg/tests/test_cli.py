import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from ratinterp.cli import run_command

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "schema" / "verification_report.schema.json").read_text())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_sylvester_json():
    code, out, _ = run("verify", "sylvester", "--order", "15", "--beta", "1/7", "--json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["status"] == "verified" and report["parameters"] == {"beta": "1/7"}


def test_lemma1():
    assert run("lemma1", "--n", "3", "--i", "2") == (0, "0\n", "")
    assert run("lemma1", "--n", "3", "--i", "3")[1] == "1\n"


def test_coeffs():
    code, out, _ = run("coeffs", "--f", "(1-u*x)/(1-v*x)", "--x-family", "geom:1,q", "--c-family", "geom:a*p,p", "--depth", "3")
    assert code == 0
    lines = out.splitlines()
    assert [line.split(" = ")[0] for line in lines] == ["A0", "A1", "A2", "A3"]
    assert lines[0] == "A0 = (1 - u)/(1 - v)"


def test_coeffs_json_matches_library():
    from ratinterp.expr import parse_value
    from ratinterp.families import newton_context
    from ratinterp.interp import rational_newton_coeffs

    code, out, _ = run("coeffs", "--f", "x^2", "--c-family", "const:0", "--depth", "2", "--json")
    assert code == 0
    expected = rational_newton_coeffs(parse_value("x^2"), newton_context(), 2)
    assert json.loads(out)["coefficients"] == [str(c) for c in expected]


def test_term():
    from ratinterp.expr import parse_value

    code, out, _ = run("term", "--f", "x^2", "--c-family", "const:0", "--n", "2")
    assert code == 0
    assert parse_value(out.strip()) == parse_value("(x - x1)*(x - x2)")


def test_usage_errors_exit_2():
    assert run("coeffs", "--f", "1 +")[0] == 2
    assert run("coeffs", "--f", "y")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("verify", "andrews", "--order", "3")[0] == 2
    assert run("verify", "sylvester", "--beta", "0.5")[0] == 2
    assert run("verify", "nothing")[0] == 2
    assert run("lemma1", "--n", "9", "--i", "0")[0] == 2
    assert run("coeffs", "--f", "x", "--x-family", "geom:1")[0] == 2
    code, _, err = run("coeffs", "--f", "1 + foo")
    assert code == 2 and "foo" in err and "column 5" in err


def test_failed_verification_exits_1(monkeypatch):
    from ratinterp import identities as ids

    def failing(**kw):
        return ids.VerificationReport("sears", ids.MODE_POINTS, {}, 0, "failed", {"n": 0})

    monkeypatch.setitem(ids.IDENTITIES, "sears", failing)
    assert run("verify", "sears")[0] == 1


def test_seed_determinism():
    first = run("verify", "sears", "--n", "3", "--samples", "3", "--seed", "9", "--json")
    second = run("verify", "sears", "--n", "3", "--samples", "3", "--seed", "9", "--json")
    assert first == second and first[0] == 0


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("RATINTERP_SEED", "77")
    _, out, _ = run("verify", "gosper", "--n", "2", "--samples", "2", "--json")
    assert json.loads(out)["parameters"]["seed"] == "77"
    monkeypatch.setenv("RATINTERP_SEED", "x")
    assert run("verify", "gosper", "--n", "1")[0] == 2


def test_mode_flag():
    code, out, _ = run("verify", "andrews", "--n", "2", "--mode", "points", "--samples", "3", "--json")
    assert code == 0 and json.loads(out)["mode"] == "rational_point"
    assert run("verify", "sears", "--mode", "symbolic")[0] == 2


def test_symbolic_beta():
    code, out, _ = run("verify", "jackson", "--order", "6", "--beta", "symbolic", "--json")
    assert code == 0 and json.loads(out)["parameters"]["beta"] == "symbolic"


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ratinterp.cli", "lemma1", "--n", "2", "--i", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"
