import json
import os
import pathlib
import shutil
import subprocess

import pytest

import qhopf

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_h8_forms():
    a = qhopf.Algebra.catalog("h8", [1])
    assert a.dim == 8
    assert a.monadic(3)["terms"] == {7: "1"}
    assert a.cointegral("left")["terms"] == {3: "1"}
    assert a.integrals()["modulus"] == {0: "1", 4: "-1"}


def test_theorem_on_uq():
    rep = qhopf.Algebra.catalog("uq", [3, 1]).verify_theorem()
    assert rep["ok"] and rep["square"]
    assert all(r["pass"] for r in rep["rows"] if r["applicable"])


def test_json_round_trip():
    a = qhopf.Algebra.catalog("taft", [3])
    b = qhopf.Algebra.from_json(a.to_json())
    assert b.to_json() == a.to_json()
    assert b.monadic(2) == a.monadic(2)


def test_fixture_file_validates():
    a = qhopf.Algebra.load(str(ROOT / "data" / "semion.json"))
    assert all(ok for _, ok, _ in a.validate(strict_r=True))


def test_corrupted_file_reports_witness():
    a = qhopf.Algebra.load(str(ROOT / "data" / "h8+_corrupted.json"))
    failed = [(n, w) for n, ok, w in a.validate() if not ok]
    assert failed and all(w for _, w in failed)


def test_errors_carry_kind():
    with pytest.raises(qhopf.QhopfError) as e:
        qhopf.Algebra.from_json("{")
    assert e.value.kind == "ParseError" and e.value.input_error
    with pytest.raises(qhopf.QhopfError) as e:
        qhopf.Algebra.catalog("zn", [3]).monadic(7)
    assert e.value.input_error


def test_cli_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    exe = os.environ.get("QHOPF_CLI") or shutil.which("qhopf")
    if not exe:
        pytest.skip("qhopf binary not available")
    schema = json.loads((ROOT / "docs" / "report-schema.json").read_text())
    out = subprocess.run([exe, "monadic", "--json", "--i", "2", str(ROOT / "data" / "h8+.json")],
                         capture_output=True, text=True)
    assert out.returncode == 0
    report = json.loads(out.stdout)
    jsonschema.validate(report, schema)
    assert report["results"]["form"]["text"] == qhopf.Algebra.catalog("h8", [1]).monadic(2)["text"]
