"""Tests for the command-line frontend: JSON reports and exit codes."""

import importlib
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from fundamental_pairs.cli import run
from fundamental_pairs.cli.records import PointFile, Report, Status
from fundamental_pairs.exceptions import RelationViolationError


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_pair_check_reports_weights(capsys):
    code, report = invoke(capsys, "pair-check", "--d", "3")
    assert code == 0
    assert report["status"] == "pass"
    assert report["command"] == "pair-check"
    assert report["inputs"]["d"] == 3
    assert report["result"]["pair"]["weights"] == [3, 1, -1, -3]
    assert report["result"]["pair"]["D"]["x1"] == "x0"
    assert "elapsedMs" in report


def test_pair_check_on_direct_sum(capsys):
    code, report = invoke(capsys, "pair-check", "--model", "sum", "--dims", "1,2")
    assert code == 0
    assert report["result"]["pair"]["weights"] == [1, -1, 2, 0, -2]


def test_criterion_finds_triple_certificate(capsys):
    code, report = invoke(capsys, "criterion", "--d", "3", "--bound", "6")
    assert code == 0
    result = report["result"]
    assert result["tripleCompatible"] == "yes-with-certificate"
    assert result["pairCompatible"] == "not-found-below-bound"
    assert result["pairCertificate"] is None
    assert result["tripleCertificate"] == {
        "kind": "A2",
        "degree": 2,
        "weight": 2,
        "element": "-x1^2 + 2*x0*x2",
    }


def test_criterion_without_certificate_exits_not_found(capsys):
    code, report = invoke(capsys, "criterion", "--d", "4", "--bound", "3")
    assert code == 3
    assert report["status"] == "not-found-below-bound"
    assert report["result"]["pairCompatible"] == "impossible-by-parity"


def test_kernel_and_count(capsys):
    code, report = invoke(capsys, "kernel", "--d", "3", "--degree", "2", "--weight", "2")
    assert code == 0
    assert report["result"]["sliceSize"] == 2
    assert report["result"]["dimension"] == 1

    code, report = invoke(capsys, "count", "--d", "3", "--degree", "4", "--weight", "0")
    assert code == 0
    assert report["result"]["count"] == report["result"]["kernelDimension"] == 1


def test_hermite(capsys):
    code, report = invoke(capsys, "hermite", "--d", "5", "--weight", "1", "--bound", "4")
    assert code == 0
    assert report["result"]["firstMismatch"] is None
    assert len(report["result"]["rows"]) == 5


def test_decompose_reduce_and_witness(capsys):
    assert invoke(capsys, "decompose", "--d", "2", "--poly", "x0*x2 + x1")[0] == 0
    assert invoke(capsys, "reduce", "--d", "2", "--poly", "x0^2*x1 + x2^3")[0] == 0
    code, report = invoke(capsys, "witness", "--d", "3", "--poly", "2*x0*x2 - x1^2")
    assert code == 0
    assert report["result"]["kind"] == "A2"
    assert (report["result"]["degD"], report["result"]["degU"]) == (1, 1)


def test_flow_on_basic_pair(capsys):
    code, report = invoke(capsys, "flow", "--d", "3", "--poly", "x3", "--t", "2")
    assert code == 0
    assert report["result"]["image"] == "x3 + 2*x2 + 2*x1 + 4/3*x0"
    assert report["result"]["nilpotencyDegree"] == 3


def test_flow_on_matrix_model(capsys):
    code, report = invoke(capsys, "flow", "--model", "cm", "--n", "2", "--t", "1/2")
    assert code == 0
    assert all(entry["passed"] for entry in report["result"]["shear"])


@pytest.mark.parametrize("suite", ["d3", "v3v3", "v4v4", "d4"])
def test_golden_suites(capsys, suite):
    code, report = invoke(capsys, "golden", "--suite", suite)
    assert code == 0
    assert all(report["result"]["checks"].values())


def test_model_check_quiver(capsys):
    code, report = invoke(capsys, "model-check", "--model", "quiver", "--m", "2", "--n", "1", "--mode", "points")
    assert code == 0
    assert report["result"]["quotient"]["pointsChecked"] == 4

    code, report = invoke(capsys, "model-check", "--model", "quiver", "--m", "3", "--n", "1", "--mode", "groebner")
    assert code == 1
    assert report["result"]["ambientRelations"]["asserted"] is False
    assert report["result"]["quotient"]["witness"] == "X_0_0_0"


def test_model_check_with_point_file(capsys, tmp_path):
    point = {"X_0_0_0": "1", "Y_0_0_0": "1", "X_1_0_0": "2", "Y_1_0_0": "3/2", "v_0": "1", "w_0": "3"}
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"points": [point]}))
    args = ("model-check", "--model", "quiver", "--m", "2", "--n", "1", "--mode", "points", "--points")
    code, report = invoke(capsys, *args, str(good))
    assert code == 0
    assert report["result"]["quotient"]["pointsChecked"] == 1

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"assignments": dict(point, w_0="5")}))
    assert invoke(capsys, *args, str(bad)) == (2, None)

    broken = tmp_path / "broken.json"
    broken.write_text("{points")
    assert invoke(capsys, *args, str(broken)) == (2, None)


def test_usage_errors(capsys):
    assert invoke(capsys, "pair-check") == (2, None)
    assert invoke(capsys, "model-check", "--model", "vd", "--d", "2") == (2, None)
    assert invoke(capsys, "flow", "--d", "2") == (2, None)
    with pytest.raises(SystemExit) as exc_info:
        run(["golden", "--suite", "d9"])
    assert exc_info.value.code == 2


def test_point_file_validation():
    points = PointFile.model_validate({"assignments": {"a": "1/2"}, "points": [{"a": "-3"}]}).to_points()
    assert points == [{"a": Fraction(1, 2)}, {"a": Fraction(-3)}]
    with pytest.raises(ValidationError):
        PointFile.model_validate({})
    with pytest.raises(ValidationError):
        PointFile.model_validate({"assignments": {"a": "1/0"}})


def test_report_exit_codes():
    report = Report(command="count", inputs={}, result={}, status=Status.NOT_FOUND)
    assert report.exit_code == 3
    assert json.loads(report.to_json())["elapsedMs"] == 0


def test_witness_relation_violation_exits_fail(capsys, monkeypatch):
    def violated(pair, f):
        raise RelationViolationError("U f != 0 for nonzero f in A_1 or A_2", "f")

    monkeypatch.setattr(importlib.import_module("fundamental_pairs.cli.main"), "useful2_witness", violated)
    code, report = invoke(capsys, "witness", "--d", "3", "--poly", "2*x0*x2 - x1^2")
    assert code == 1
    assert report["status"] == "fail"
    assert report["result"] == {"violation": "U f != 0 for nonzero f in A_1 or A_2", "witness": "f"}


def test_witness_precondition_is_a_usage_error(capsys):
    assert invoke(capsys, "witness", "--d", "3", "--poly", "x1") == (2, None)
