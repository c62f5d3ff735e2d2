import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

from gxinduce import cli
from gxinduce.catalog import entry_path
from gxinduce.io import (
    ParseError,
    SchemaError,
    ValidationError,
    decode,
    decode_scalar,
    dumps,
    encode,
    encode_scalar,
    load,
    loads,
)
from gxinduce.kernel import Scalar

from _util import doc, negate

GOLDEN = Path(__file__).with_name("golden")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", ["vec_z2", "toric_z2", "ising_crossed"])
def test_round_trip_is_byte_identical(name):
    text = entry_path(name).read_text(encoding="utf-8")
    assert dumps(encode(loads(text))) == text


def test_scalar_encoding():
    x = Scalar.zeta(3, 16) - Scalar.from_rational(1, 16) / 2
    assert decode_scalar(encode_scalar(x, 16), "$") == x
    assert decode_scalar("3/4", "$") == Scalar.from_rational(Fraction(3, 4))
    assert decode_scalar(-2, "$") == -2


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        loads('{\n  "format": "gxinduce-instance",\n  "version": 1,,\n}')
    assert info.value.line == 3
    assert info.value.column == 16


def test_schema_errors():
    with pytest.raises(SchemaError) as info:
        decode({"format": "other"})
    assert info.value.path == "$.format"
    d = doc("vec_z2")
    del d["labels"]
    with pytest.raises(SchemaError):
        decode(d)
    d = doc("vec_z2")
    d["F"][0]["matrix"] = "oops"
    with pytest.raises(SchemaError):
        decode(d)


def test_negated_f_rejected_with_pentagon_witness():
    d = doc("toric_z2")
    for ent in d["F"]:
        if ent["labels"] == ["e", "m", "m", "e"]:
            ent["matrix"][0][0] = negate(ent["matrix"][0][0])
    with pytest.raises(ValidationError) as info:
        loads(json.dumps(d))
    fail = info.value.report.failures()[0]
    assert fail.check_id.startswith("pentagon.")
    assert fail.witness is not None


def test_z_one_i_rejected():
    d = doc("toric_z2")
    d["settings"][0]["z"]["g"]["e"] = [[encode_scalar(Scalar.i(8), 8)]]
    with pytest.raises(ValidationError) as info:
        loads(json.dumps(d))
    ids = [f.check_id for f in info.value.report.failures()]
    assert "condensed.equivariance.z_cocycle" in ids


def test_approx_mode_loads(tmp_path):
    inst = load(entry_path("ising_crossed"), approx=True)
    assert not inst.cat.field.exact


def test_cli_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", "toric_z2")
    assert code == 0
    assert "PASS" in out


def test_cli_homdim_text(capsys):
    code, out, _ = run(capsys, "homdim", "toric_z2", "--g", "g", "--lambda", "m", "--mu", "m")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "homdim", "toric_z2", "--g", "e", "--lambda", "m", "--mu", "m", "--chirality", "mixed")
    assert code == 0 and out.strip() == "0"


def test_cli_usage_errors(capsys):
    assert run(capsys, "homdim", "toric_z2", "--g", "x", "--lambda", "m", "--mu", "m")[0] == 2
    assert run(capsys, "sectors", "no_such_entry", "--g", "e")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "induce", "ising_crossed", "--setting", "psi_algebra", "--g", "e", "--lambda", "1")[0] == 2


def test_cli_parse_error_exit(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{ nope", encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(p), "--json")
    assert code == 2
    assert json.loads(out)["error"] == "parse"


def test_cli_validation_failure_exit(tmp_path, capsys):
    d = doc("toric_z2")
    for ent in d["F"]:
        if ent["labels"] == ["e", "m", "m", "e"]:
            ent["matrix"][0][0] = negate(ent["matrix"][0][0])
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d), encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(p), "--json")
    assert code == 1
    rep = json.loads(out)
    assert rep["passed"] is False
    checks = [c for s in rep["suites"] for c in s["checks"] if not c["passed"]]
    assert checks[0]["witness"]


def test_cli_export_round_trip(tmp_path, capsys):
    p = tmp_path / "out.json"
    assert run(capsys, "catalog", "export", "ising_crossed", str(p))[0] == 0
    assert p.read_text(encoding="utf-8") == entry_path("ising_crossed").read_text(encoding="utf-8")
    code, out, _ = run(capsys, "catalog", "list", "--json")
    assert code == 0 and json.loads(out)["entries"] == ["ising_crossed", "toric_z2", "vec_z2"]


def test_cli_json_deterministic(capsys, monkeypatch):
    argv = ["theorems", "toric_z2", "--json"]
    monkeypatch.setenv("GXI_THREADS", "1")
    a = run(capsys, *argv)[1]
    monkeypatch.setenv("GXI_THREADS", "4")
    b = run(capsys, *argv)[1]
    c = run(capsys, *argv)[1]
    assert a == b == c
    assert json.loads(a)["passed"] is True


GOLDEN_CASES = {
    "homdim_toric_g_m_m": ["homdim", "toric_z2", "--g", "g", "--lambda", "m", "--mu", "m", "--json"],
    "sectors_toric_g": ["sectors", "toric_z2", "--g", "g", "--json"],
    "sectors_ising_e": ["sectors", "ising_crossed", "--g", "e", "--json"],
    "induce_toric_e_m": ["induce", "toric_z2", "--g", "e", "--lambda", "m", "--json"],
    "validate_vec": ["validate", "vec_z2", "--json"],
}


@pytest.mark.parametrize("case", sorted(GOLDEN_CASES))
def test_golden_json(case, capsys):
    code, out, _ = run(capsys, *GOLDEN_CASES[case])
    assert code == 0
    path = GOLDEN / f"{case}.json"
    if os.environ.get("GXI_UPDATE_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
