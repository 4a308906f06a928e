import json
import subprocess
import sys

import jsonschema
import pytest

from injspec import cli, laws


@pytest.fixture
def query(capsys, monkeypatch, tmp_path):
    def go(doc, *extra):
        f = tmp_path / "q.json"
        f.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
        code = cli.main(["query", str(f), *extra])
        out = capsys.readouterr().out
        return code, json.loads(out), out
    return go


GRADED = {"backend": "graded", "p": 2}
T2 = {"backend": "findim", "catalog": "T2(F_2)"}


def doc(space, **q):
    return {"format": 1, "space": space, "query": q}


def test_graded_support(query):
    code, out, _ = query(doc(GRADED, op="support", module={"frees": [2]}))
    assert code == 0
    assert out["result"]["has_z"] is True and out["result"]["ray"] == 2


def test_integral_triangular(query):
    code, out, _ = query(doc(T2, op="integral"))
    assert code == 0
    assert out["result"] == {"integral": True, "big_injective": "E(Sb)"}


def test_xred_line(query):
    code, out, _ = query(doc({"backend": "polyline", "p": 2}, op="xred"))
    assert code == 0 and out["result"]["reduced"] is True


def test_output_is_byte_identical(query):
    d = doc(T2, op="gabriel-member", module={"projective": "Sa"},
            z1={"sigma": [{"simple": "Sa"}]}, z2={"sigma": [{"simple": "Sb"}]})
    first = query(d)
    second = query(d)
    assert first[2] == second[2]
    assert first[1]["result"] == {"member": True}


def test_canonical_echo_round_trips(query):
    d = doc(GRADED, op="support", module={"presentation": [["x^3"]], "gen_degrees": [1]})
    _, out, text = query(d)
    _, again, text2 = query(out["input"])
    assert again["input"] == out["input"] and text == text2


@pytest.mark.parametrize("text, code", [
    ('{"format": 1', 1),
    ('{"format": 2, "space": {"backend": "graded"}, "query": {"op": "v"}}', 1),
    (json.dumps(doc(GRADED, op="bogus")), 1),
    (json.dumps(doc(GRADED, op="xred")), 2),
    (json.dumps(doc(T2, op="support", module={"simple": "Sz"})), 1),
])
def test_exit_codes(query, text, code):
    got, out, _ = query(text)
    assert got == code
    assert "error" in out and "error" in out["error"]


def test_malformed_reports_position(query):
    _, out, _ = query('{\n  "format": 1,\n  oops\n}')
    assert out["error"]["line"] == 3


def test_timing_is_opt_in(query):
    _, out, _ = query(doc(T2, op="integral"))
    assert "timing" not in out
    _, out, _ = query(doc(T2, op="integral"), "--timing")
    assert out["timing"]["seconds"] >= 0


def test_caps_option_restored(query):
    from injspec import caps
    before = caps.CAPS
    t2_constants = {
        "backend": "findim", "p": 2, "unit": [1, 0, 1],
        "mult": [[[1, 0, 0], [0, 1, 0], [0, 0, 0]],
                 [[0, 0, 0], [0, 0, 0], [0, 1, 0]],
                 [[0, 0, 0], [0, 0, 0], [0, 0, 1]]],
    }
    d = doc(t2_constants, op="integral")
    assert query(d)[0] == 0
    d["options"] = {"caps": {"elements": 4}}
    code, out, _ = query(d)
    assert code == 2 and out["error"]["error"] == "CapExceeded"
    assert caps.CAPS == before


def test_laws_failure_exits_three(capsys, monkeypatch):
    bad = {"suite": "union", "seed": 0, "window": None, "passed": False,
           "laws": [{"law": "x", "instances": 1, "passed": 0, "counterexample": {"m": "M"}}]}
    monkeypatch.setattr(laws, "run", lambda *a, **k: bad)
    assert cli.main(["laws", "--suite", "union"]) == 3
    assert json.loads(capsys.readouterr().out)["laws"][0]["counterexample"] == {"m": "M"}


def test_catalog_and_schema(capsys):
    assert cli.main(["catalog", "list"]) == 0
    names = [s["name"] for s in json.loads(capsys.readouterr().out)["spaces"]]
    assert "T2(F_2)" in names and "graded p=2" in names
    assert cli.main(["schema", "print"]) == 0
    schema = json.loads(capsys.readouterr().out)
    jsonschema.Draft202012Validator.check_schema(schema)
    jsonschema.validate(doc(T2, op="integral"), schema)


def test_subprocess_entry_point(tmp_path):
    f = tmp_path / "q.json"
    f.write_text(json.dumps(doc(GRADED, op="basic", set={"z": True})))
    out = subprocess.run([sys.executable, "-m", "injspec", "query", str(f)],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["basic"] is False
    assert out.stderr == ""
