import json
import subprocess
import sys

import pytest

from twocat.cli import MAX_REPORTED, main, run_command
from twocat.core2 import Fin2Cat, cyclic_group, delooping
from twocat.formats import serialize

REPORT_KEYS = {"command", "inputs", "caps", "status", "counts", "violations", "wall_time_ms"}


def stable(report):
    return {k: v for k, v in report.items() if k != "wall_time_ms"}


def test_validate_fixture():
    code, rep = run_command(["validate", "sigma_c4"])
    assert code == 0
    assert set(rep) == REPORT_KEYS
    assert rep["status"] == "pass"
    assert rep["counts"] == {"kind": "2category", "cells0": 1, "cells1": 4, "cells2": 4}
    (inp,) = rep["inputs"]
    assert inp["name"] == "sigma_c4" and inp["kind"] == "2category" and len(inp["sha256"]) == 64
    assert rep["violations"] == {"total": 0, "shown": []}
    assert rep["caps"] == {"search_budget": 10**6}


def test_zg_reports_empty_grade():
    code, rep = run_command(["zg", "sigma_c4", "inv_act"])
    assert code == 0
    assert rep["counts"]["empty_grades"] == ["s"]
    assert rep["counts"]["objects_per_grade"] == {"e": 4, "s": 0}


def test_zg_strictifies_non_strict_actions():
    code, rep = run_command(["zg", "sigma_c1_c2", "cocycle_c2"])
    assert code == 0 and rep["counts"]["strictified"] is True


def test_check_theorem_counts_agree():
    code, rep = run_command(["check-theorem", "center-equi", "sigma_c2", "trivial_c2"])
    assert code == 0
    c = rep["counts"]
    assert c["ZPhi_G_objects"] == c["Z_BG_objects"] and c["ZPhi_G_morphisms"] == c["Z_BG_morphisms"]
    assert rep["command"] == "check-theorem center-equi"


def test_jobs_do_not_change_the_report():
    args = ["check-theorem", "center-equi", "sigma_c4", "inv_act"]
    _, one = run_command(args)
    _, two = run_command(args + ["--jobs", "2"])
    assert stable(one) == stable(two)


@pytest.mark.parametrize("args", [
    ["validate", "inv_act"],
    ["strictify", "sigma_c2", "trivial_c2"],
    ["equivariantize", "sigma_c4", "inv_act"],
    ["center", "sigma_s3"],
])
def test_reports_are_deterministic(args):
    first_code, first = run_command(args)
    second_code, second = run_command(args)
    assert first_code == second_code == 0
    assert json.dumps(stable(first), sort_keys=True) == json.dumps(stable(second), sort_keys=True)


def test_center_of_s3():
    code, rep = run_command(["center", "sigma_s3"])
    assert code == 0 and rep["counts"] == {"objects": 1, "morphisms": 1}


def test_strictify_cocycle_action():
    code, rep = run_command(["strictify", "sigma_c1_c2", "cocycle_c2"])
    assert code == 0 and rep["counts"]["strict"] is True


def test_unknown_theorem_and_name_are_usage_errors():
    assert run_command(["check-theorem", "nope", "sigma_c2", "trivial_c2"])[0] == 2
    code, rep = run_command(["validate", "no_such_thing"])
    assert code == 2 and rep["status"] == "error"
    assert rep["violations"]["shown"][0]["axiom"] == "SchemaError"


def test_mismatched_base_is_a_usage_error():
    code, rep = run_command(["zg", "sigma_c2", "inv_act"])
    assert code == 2 and rep["violations"]["shown"][0]["axiom"] == "UsageError"


def test_non_positive_caps_are_rejected():
    assert run_command(["validate", "sigma_c2", "--caps", "0"])[0] == 2


def test_budget_exhaustion_fails():
    code, rep = run_command(["equivariantize", "sigma_c4", "inv_act", "--caps", "2"])
    assert code == 1 and rep["violations"]["shown"][0]["axiom"] == "SearchBudgetExceeded"


def test_syntax_error_file(tmp_path):
    path = tmp_path / "bad.grp"
    path.write_text("kind: group\nname: [oops\n", encoding="utf-8")
    code, rep = run_command(["validate", str(path)])
    assert code == 2 and rep["violations"]["shown"][0]["axiom"] == "ParseError"


def test_group_without_inverse_file(tmp_path):
    path = tmp_path / "m.grp"
    path.write_text("kind: group\nname: m\nelements: [e, z]\nunit: e\ntable: [[e, z], [z, z]]\n", encoding="utf-8")
    code, rep = run_command(["validate", str(path)])
    assert code == 2 and rep["violations"]["shown"][0]["axiom"] == "SchemaError"


def broken_2category(size):
    B = delooping(cyclic_group(size))
    return Fin2Cat(B.cells0, list(zip(B.names1, B.src1, B.tgt1)), list(zip(B.names2, B.src2, B.tgt2)),
                   B.unit1, B.id2, B.vc, B.hc1, {k: 0 for k in B.hc2}, "flat")


def test_failing_validation_exits_one_and_caps_the_list(tmp_path):
    path = tmp_path / "flat.2cat"
    path.write_text(serialize(broken_2category(12), "flat"), encoding="utf-8")
    code, rep = run_command(["validate", str(path)])
    assert code == 1 and rep["status"] == "fail"
    assert rep["violations"]["total"] == 132
    assert len(rep["violations"]["shown"]) == MAX_REPORTED


def test_dependent_file_with_invalid_base_is_a_usage_error(tmp_path):
    (tmp_path / "flat.2cat").write_text(serialize(broken_2category(3), "flat"), encoding="utf-8")
    code, rep = run_command(["center", "flat", "--path", str(tmp_path)])
    assert code == 2 and rep["violations"]["shown"][0]["axiom"] == "ValidationError"


def test_out_and_text_format(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["validate", "c3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["counts"] == {"kind": "group", "order": 3}
    assert main(["validate", "c3", "--format", "text"]) == 0
    text = capsys.readouterr().out
    assert "status: pass" in text and "wall_time_ms:" in text


def test_argument_errors_exit_two(capsys):
    assert main(["zg", "sigma_c2"]) == 2
    assert main(["frobnicate"]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twocat.cli", "validate", "sigma_c4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
