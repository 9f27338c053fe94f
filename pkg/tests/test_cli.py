import io
import json

import pytest

from symcones.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    EXIT_VERIFY,
    ParseError,
    parse_spec_text,
    parse_vector,
    run,
)
from symcones.equivariant import classify_local_cone
from symcones.exactmath import QVector
from symcones.polyhedra import Cone, dual, equals
from symcones.equivariant import local_cone


def _spec_file(tmp_path, r, gens, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"r": r, "generators": gens}))
    return str(p)


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def mixed_file(tmp_path):
    return _spec_file(tmp_path, 3, [[-2, -1, 4], [-3, 1, 3]])


def test_document_shape(mixed_file):
    code, out, _ = _run(["dual", mixed_file, "--level", "4"])
    assert code == EXIT_OK
    doc = json.loads(out)
    assert set(doc) == {"command", "input_digest", "result", "diagnostics", "timing"}
    assert doc["command"] == "dual" and doc["timing"] is None
    assert doc["input_digest"].startswith("sha256:") and len(doc["input_digest"]) == 71


def test_output_is_byte_identical_across_runs(mixed_file):
    a = _run(["equidual", mixed_file, "--level", "5", "--refined"])
    b = _run(["equidual", mixed_file, "--level", "5", "--refined"])
    assert a == b and a[0] == EXIT_OK
    assert json.loads(a[1])["result"]["sound"] is True


def test_timing_is_opt_in(mixed_file):
    code, out, _ = _run(["dual", mixed_file, "--level", "3", "--timing"])
    assert code == EXIT_OK and "seconds" in json.loads(out)["timing"]


def test_dual_output_round_trips(mixed_file):
    code, out, _ = _run(["dual", mixed_file, "--level", "4"])
    res = json.loads(out)["result"]
    rays = [parse_vector(json.dumps(v)) for v in res["rays"]]
    D = Cone(rays, 4)
    assert equals(D, dual(local_cone(parse_spec_text(open(mixed_file).read()), 4)))
    assert classify_local_cone(D).value == "Pointed"


def test_hilbert_output_round_trips(tmp_path):
    f = _spec_file(tmp_path, 2, [[-1, 2]])
    code, out, _ = _run(["hilbert", f, "--level", "3"])
    res = json.loads(out)["result"]
    assert code == EXIT_OK and res["size"] == 12 and res["norm"] == 3
    f2 = _spec_file(tmp_path, 3, res["basis"], "again.json")
    code2, out2, _ = _run(["hilbert", f2, "--level", "3"])
    assert json.loads(out2)["result"]["basis"] == res["basis"]


def test_rationals_serialize_as_strings(tmp_path):
    f = _spec_file(tmp_path, 1, [["1/2"]])
    code, out, _ = _run(["member", f, "--level", "2", "--vector", "1/3,0"])
    res = json.loads(out)["result"]
    assert code == EXIT_OK and res["member"] is True
    assert res["witness"][0]["coefficient"] == "1/3"


def test_classify_and_member_commands(tmp_path, mixed_file):
    f = _spec_file(tmp_path, 2, [[1, -1], [-1, 0]])
    assert json.loads(_run(["classify", f])[1])["result"]["tag"] == "C4_sumnonpos"
    assert json.loads(_run(["classify", f, "--monoid"])[1])["result"]["tag"] == "M4_sumnonpos"
    assert json.loads(_run(["classify", f, "--level", "3"])[1])["result"]["tag"] == "D4_sumnonpos"
    code, out, _ = _run(["classify", mixed_file, "--restricted-dual"])
    assert json.loads(out)["result"] == {"scope": "restricted_dual", "tag": "zero", "oracle_observed": "zero"}
    code, out, _ = _run(["member", mixed_file, "--global-dual", "--prefix", "1", "--tail", "0"])
    res = json.loads(out)["result"]
    assert res["member"] is False and res["violation"]["placed"]


def test_stabilize_and_equihilbert(tmp_path):
    f = _spec_file(tmp_path, 1, [[1]])
    res = json.loads(_run(["stabilize", f, "--cap", "2"])[1])["result"]
    assert res["report"]["empirical_index"] == 1 and res["report"]["certified"]
    res = json.loads(_run(["equihilbert", f, "--certified"])[1])["result"]
    assert res["q"] == 3 and res["representatives"] == [[1, 0, 0]]


def test_table_format(mixed_file):
    code, out, _ = _run(["classify", mixed_file, "--format", "table"])
    assert code == EXIT_OK and "Pointed" in out and not out.lstrip().startswith("{")


def test_stdin_spec(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"r": 1, "generators": [[1]]}'))
    code, out, _ = _run(["classify", "-"])
    assert code == EXIT_OK and json.loads(out)["result"]["tag"] == "Pointed"


# -- exit codes -------------------------------------------------------------------------------


def test_usage_error():
    assert _run(["dual"])[0] == EXIT_USAGE
    assert _run(["frobnicate"])[0] == EXIT_USAGE


@pytest.mark.parametrize("text, where", [
    ('{"r": 2, "generators": [[1, 2, 3]]}', "row 1"),
    ('{"r": 2, "generators": [[1, "x"]]}', "column 2"),
    ('{"r": 2, "generators": [[1, 0.5]]}', "column 2"),
    ('{"r": 2', "line 1"),
])
def test_parse_errors_name_the_location(tmp_path, text, where):
    p = tmp_path / "bad.json"
    p.write_text(text)
    code, _, err = _run(["classify", str(p)])
    assert code == EXIT_PARSE and where in err
    with pytest.raises(ParseError):
        parse_spec_text(text)


def test_missing_file_is_a_parse_error(tmp_path):
    assert _run(["classify", str(tmp_path / "nope.json")])[0] == EXIT_PARSE


def test_precondition_error(tmp_path):
    f = _spec_file(tmp_path, 1, [[1], [-1]])
    code, _, err = _run(["hilbert", f, "--level", "2"])
    assert code == EXIT_PRECONDITION and "precondition" in err
    f = _spec_file(tmp_path, 3, [[-2, -1, 4]], "m.json")
    assert _run(["equidual", f, "--level", "4"])[0] == EXIT_PRECONDITION


def test_budget_exhaustion(tmp_path, monkeypatch):
    f = _spec_file(tmp_path, 2, [[-1, 2]])
    code, out, _ = _run(["hilbert", f, "--level", "4", "--budget", "5"])
    assert code == EXIT_BUDGET and json.loads(out)["result"]["outcome"] == "budget exhausted"
    monkeypatch.setenv("SYMCONES_BUDGET", "5")
    assert _run(["hilbert", f, "--level", "4"])[0] == EXIT_BUDGET


def test_verify_single_suite():
    code, out, _ = _run(["verify", "--suite", "padding", "--trials", "10", "--seed", "2"])
    doc = json.loads(out)
    assert code == EXIT_OK and doc["result"]["ok"] and doc["result"]["suites"][0]["trials"] == 10
    assert EXIT_VERIFY == 1


def test_parse_vector_forms():
    assert parse_vector("[1, \"2/4\", -3]") == [1, QVector(["1/2"])[0], -3]
    assert parse_vector("1, 2/3") == [1, QVector(["2/3"])[0]]
    with pytest.raises(ParseError):
        parse_vector("[1,")
