import json
from pathlib import Path

import pytest

from qschubert.cli import canonical_json, export_frame_bundle, main, parse_word, run
from qschubert.errors import BoundExceeded
from qschubert.weyl import from_word, identity

GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("argv,name", [
    (["--cartan", "A2", "positive-subexpr", "--word", "1,2,1", "--u", "1"], "positive_subexpr_a2.json"),
    (["--cartan", "A2", "exponent-matrix", "--word", "1,2,1", "--u", "1", "--which", "b"], "b_matrix_a2.json"),
    (["--cartan", "A2", "frame", "--word", "1,2,1", "--u", "1", "--all"], "frame_bundle_a2.json"),
    (["xi-enumerate", "--n", "4"], "xi4.json"),
])
def test_golden_outputs(capsys, argv, name):
    code, out = invoke(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_positive_subexpr_example(capsys):
    code, out = invoke(capsys, "--cartan", "A2", "positive-subexpr", "--word", "1,2,1", "--u", "1")
    assert code == 0 and json.loads(out)["D"] == [3]


def test_malformed_gcm_exit_2(capsys):
    code, out = invoke(capsys, "--cartan", '{"gcm": [[2,-1,-1],[-1,2,-1],[-2,-1,2]]}', "cartan")
    assert code == 2 and json.loads(out)["error"] == "NotSymmetrizable"


def test_cartan_from_file(tmp_path, capsys):
    f = tmp_path / "g2.json"
    f.write_text('{"gcm": [[2, -1], [-3, 2]]}')
    code, out = invoke(capsys, "cartan", "--cartan", str(f))
    assert code == 0 and json.loads(out)["d"] == [3, 1]


def test_missing_cartan(capsys):
    code, out = invoke(capsys, "bruhat", "--u", "1", "--w", "1,2")
    assert code == 2 and json.loads(out)["error"] == "SchemaError"


def test_bruhat_and_word(capsys):
    code, out = invoke(capsys, "--cartan", "A3", "bruhat", "--u", "1,3", "--w", "2,1,3,2")
    assert code == 0 and json.loads(out)["leq"] is True
    code, out = invoke(capsys, "--cartan", "A2", "word", "--word", "1,1")
    assert json.loads(out)["reduced"] is False


def test_verify_empty_and_unknown(capsys):
    code, out = invoke(capsys, "verify")
    assert code == 0 and json.loads(out) == {"failures": 0, "instances": 0, "suites": []}
    code, out = invoke(capsys, "verify", "--suite", "bogus")
    assert code == 2 and json.loads(out)["error"] == "UnknownSuite"


def test_verify_qmatrix_suite(capsys):
    code, out = invoke(capsys, "verify", "--suite", "qmatrix", "--m", "2", "--n", "2")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == 0 and rep["instances"] > 0


def test_qmatrix_command(capsys):
    code, out = invoke(capsys, "qmatrix", "verify", "--m", "2", "--n", "2", "--u", "2")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] == rep["total"] == 8


def test_twist_check(capsys):
    code, out = invoke(capsys, "--cartan", "A3", "twist-check", "--word", "2,1,3,2", "--u", "2")
    assert code == 0 and json.loads(out)["consistent"]


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "o.json"
    code, out = invoke(capsys, "--cartan", "A2", "--out", str(target), "cartan")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["gcm"] == [[2, -1], [-1, 2]]


def test_run_jobspec(tmp_path, capsys):
    text, code = run({"command": "bruhat", "cartan": "A2", "params": {"u": "1", "w": "2"}})
    assert code == 0 and json.loads(text)["leq"] is False
    text, code = run({"command": "nope"})
    assert code == 2 and json.loads(text)["error"] == "SchemaError"
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "xi-enumerate", "params": {"n": 3}}))
    code, out = invoke(capsys, "run", str(job))
    assert code == 0 and json.loads(out)["count"] == 4


def test_frame_bundle_bounds(A2, A3):
    assert export_frame_bundle(A2, (1, 2, 1), identity(A2))["count"] == 4
    bundle = export_frame_bundle(A2, (1, 2, 1), identity(A2))
    assert all(len(f["generators"]) == 3 for f in bundle["frames"])
    w = from_word(A2, (1, 2, 1))
    assert all(f["generators"] == [] for f in export_frame_bundle(A2, (1, 2, 1), w)["frames"])
    with pytest.raises(BoundExceeded):
        export_frame_bundle(A3, (1, 2) * 7, identity(A3))


def test_canonical_json_is_deterministic():
    assert canonical_json({"b": 1, "a": [2, 1]}) == canonical_json({"a": [2, 1], "b": 1})


def test_parse_word():
    assert parse_word("1, 2 3") == (1, 2, 3)
    assert parse_word("[2,1]") == (2, 1)
    assert parse_word("") == () == parse_word("e")
