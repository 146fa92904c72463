"""Command-line interface: exit codes, formats, and determinism."""

import io
import json
import contextlib

import pytest

from qvertex import cli


def run_cli(argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def test_verify_qcalc_text():
    code, out, _ = run_cli(["verify", "qcalc"])
    assert code == 0
    assert "suite qcalc: pass" in out
    assert all(line.startswith(("ok", "FAIL", "suite"))
               for line in out.strip().splitlines())


def test_verify_qcalc_json():
    code, out, _ = run_cli(["verify", "qcalc", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "verify"
    assert doc["suite"] == "qcalc"
    assert doc["pass"] is True
    assert all(c["pass"] for c in doc["checks"])


def test_verify_integrability():
    code, out, _ = run_cli(["verify", "integrability", "--level", "2",
                            "--weight-bound", "3"])
    assert code == 0
    assert "suite integrability: pass" in out


def test_basis_json_schema():
    code, out, _ = run_cli(["basis", "--level", "2", "--degq", "3",
                            "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    for el in doc["elements"]:
        assert set(el) == {"pairs", "deg_q", "wt", "diagram"}
        for m, r in el["pairs"]:
            assert 1 <= m <= 2 and r <= -1


def test_basis_deterministic():
    a = run_cli(["basis", "--level", "2", "--degq", "4", "--format", "json"])
    b = run_cli(["basis", "--level", "2", "--degq", "4", "--format", "json"])
    assert a == b


def test_character_json_schema():
    code, out, _ = run_cli(["character", "--level", "1", "--order", "6",
                            "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert [row["n"] for row in doc["table"]] == list(range(7))
    assert doc["table"][0]["coeff"] == "1"


def test_character_symbolic_level():
    code, out, _ = run_cli(["character", "--order", "4", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["level"] is None
    assert doc["table"][1]["coeff"] == "c"


def test_identity_command():
    code, out, _ = run_cli(["identity", "--order", "8", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["equal"] is True and doc["first_mismatch"] is None


def test_straighten_roundtrip():
    code, out, _ = run_cli(["straighten", "x[1,-1] x[1,-1] 1",
                            "--level", "2"])
    assert code == 0
    assert "x[2,-1] 1" in out


def test_straighten_bad_monomial_is_usage_error():
    code, _, err = run_cli(["straighten", "x[1,-1] nonsense"])
    assert code == 2
    assert "vacuum" in err or "monomial" in err


def test_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run_cli(["verify", "nosuch"])
    assert exc.value.code == 2
