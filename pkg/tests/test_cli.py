import json
import subprocess
import sys

import pytest

from gradedrham.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compare_cusp(capsys):
    code, out, _ = run(capsys, "compare", "cusp", "--weights", "0..18", "--adic", "4", "--levels", "2",
                       "--p-max", "8")
    assert code == 0
    assert "verdict: AGREE" in out
    js = json.loads(run(capsys, "compare", "cusp", "--weights", "0..18", "--adic", "4", "--levels", "2",
                        "--p-max", "8", "--format", "json")[1])
    assert js["verdict"] == "AGREE" and js["amitsur"]["totals"][0] == 1 and js["hartshorne"]["totals"][0] == 1


def test_log_cocycle_torus(capsys):
    code, out, _ = run(capsys, "log-cocycle", "torus", "--unit", "t", "--inverse", "s", "--adic", "4")
    assert code == 0
    assert out.splitlines()[0] == "cocycle OK; 1-form = s*dt"
    js = json.loads(run(capsys, "log-cocycle", "torus", "--unit", "t", "--inverse", "s", "--format", "json")[1])
    assert js["cocycle_ok"] is True and js["oneform"] == "s*dt" and js["class_nonzero"] is True


def test_uncompleted_torus(capsys):
    code, out, _ = run(capsys, "amitsur", "torus", "--uncompleted", "--levels", "2", "--weights", "-3..3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["totals"] == [1, 0]


def test_report_json_schema(capsys):
    code, out, _ = run(capsys, "hartshorne", "cusp", "--weights", "0..6", "--p-max", "6", "--format", "json")
    assert code == 0
    js = json.loads(out)
    assert {"ring", "params", "weights", "totals", "warnings"} <= set(js)
    assert all({"d", "h", "stabilized"} <= set(w) for w in js["weights"])
    assert js["totals"] == [1, 0, 0]


def test_naive_and_check(capsys):
    code, out, _ = run(capsys, "naive", "milnor", "--format", "json")
    assert code == 0 and json.loads(out)["totals"] == [4, 0, 0]
    code, out, _ = run(capsys, "check", "torus", "--weights", "-2..2", "--format", "json")
    assert code == 0
    assert [r["dim"] for r in json.loads(out)["pieces"]] == [1, 1, 1, 1, 1]
    code, out, _ = run(capsys, "check", "cusp", "--weights", "0..3")
    assert code == 0 and "dim B_d" in out


@pytest.mark.parametrize("command", [["amitsur", "--levels", "2"], ["hartshorne", "--p-max", "5"], ["naive"]])
def test_json_deterministic_across_jobs(capsys, command):
    outs = []
    for jobs in ("1", "3"):
        code, out, _ = run(capsys, command[0], "fermat", "--weights", "0..5", "--format", "json", "--jobs", jobs,
                           *command[1:])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_exit_code_on_unstabilized(capsys):
    code, _, _ = run(capsys, "amitsur", "torus", "--weights", "0..0", "--adic", "3", "--levels", "2")
    assert code == 1


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "hartshorne", "no-such-ring")
    assert code == 2 and "no-such-ring" in err
    bad = tmp_path / "bad.ring"
    bad.write_text("ring bad\nvars x:2 y:3\nrels y^2 - x\n")
    code, out, _ = run(capsys, "naive", str(bad), "--format", "json")
    assert code == 2
    assert json.loads(out)["error"]["code"] == "non_homogeneous_relation"
    broken = tmp_path / "broken.ring"
    broken.write_text("ring b\nvars x:1\nrels x +\n")
    code, out, _ = run(capsys, "naive", str(broken), "--format", "json")
    assert code == 2 and json.loads(out)["error"]["code"] == "parse_error"
    code, _, _ = run(capsys, "log-cocycle", "torus", "--unit", "t +", "--inverse", "s")
    assert code == 2
    code, _, _ = run(capsys, "log-cocycle", "torus", "--unit", "t", "--inverse", "t")
    assert code == 1
    with pytest.raises(SystemExit) as info:
        main(["hartshorne", "cusp", "--weights", "5..1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "cusp"])
    assert info.value.code == 2


def test_corpus_subset(capsys):
    code, out, _ = run(capsys, "corpus", "--only", "artinian", "etale", "dual")
    assert code == 0
    assert out.strip().endswith("checks passed")


def test_corpus_failure_exit(capsys, tmp_path):
    (tmp_path / "wrong.ring").write_text("ring wrong\nvars x:1\nexpect hartshorne 2 0 window=0..3\n")
    code, out, _ = run(capsys, "corpus", "--dir", str(tmp_path), "--format", "json")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gradedrham", "check", "line", "--weights", "0..2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "line" in res.stdout
