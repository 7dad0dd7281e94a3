import json

import pytest

from branchtab import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_branch_single_weight(capsys):
    payload = run_json(capsys, "branch", "--group", "O5", "--lambda", "2,2",
                       "--weight", "0,0,0,0,0")
    assert payload["command"] == "branch"
    assert payload["result"] == {"multiplicity": "5"}
    assert payload["inputs"] == {"group": "O5", "lambda": "2,2",
                                 "weight": "0,0,0,0,0"}
    assert isinstance(payload["elapsed_ms"], int)
    assert payload["version"]


def test_branch_full_table(capsys):
    payload = run_json(capsys, "branch", "--group", "Sp6", "--lambda", "0")
    assert payload["result"]["table"] == {"0,0,0": "1"}


def test_branch_list_gl(capsys):
    payload = run_json(capsys, "branch", "--group", "GL4", "--lambda",
                       "2,1,-2,-2", "--weight", "2,-1,-2,0", "--list")
    assert payload["result"]["multiplicity"] == "1"
    assert payload["result"]["tableaux"] == [["1,1/4", "2,3/3,4"]]


def test_stable_branch_example(capsys):
    payload = run_json(capsys, "stable-branch", "--group", "Sp6", "--blocks",
                       "1,1,1", "--lambda", "2,2", "--mu", "0;0;0", "--n", "2")
    assert payload["result"] == {"multiplicity": "3"}


def test_stable_branch_single_block(capsys):
    payload = run_json(capsys, "stable-branch", "--group", "O5", "--blocks",
                       "5", "--lambda", "2,2", "--mu", "2,2", "--n", "2")
    assert payload["result"] == {"multiplicity": "1"}


def test_stable_branch_out_of_range_exit_code(capsys):
    code, out, err = run(capsys, "stable-branch", "--group", "Sp6", "--blocks",
                         "1,1,1", "--lambda", "2,2,2", "--mu", "0;0;0",
                         "--n", "3")
    assert code == 4
    assert "exceeds" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "branch", "--group", "Q7", "--lambda", "2")
    assert code == 2 and "parse error" in err
    code, _, err = run(capsys, "branch", "--group", "O5", "--lambda", "2,5")
    assert code == 2


def test_validation_error_exit_code(capsys):
    code, _, err = run(capsys, "branch", "--group", "O2", "--lambda", "1,1,1")
    assert code == 3 and "validation error" in err
    code, _, err = run(capsys, "branch", "--group", "Sp6", "--lambda", "2,2",
                       "--weight", "0,-1,0")
    assert code == 3


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["branch", "--lambda", "2,2"])  # missing --group
    assert info.value.code == 2
    capsys.readouterr()


def test_lrc(capsys):
    payload = run_json(capsys, "lrc", "--lambda", "6,5,3,1",
                       "--mu", "5,2,1;4,3")
    assert payload["result"] == {"coefficient": "3"}


def test_dim(capsys):
    payload = run_json(capsys, "dim", "--group", "GL4", "--lambda", "2,1,-2,-2")
    assert payload["result"] == {"dimension": "140"}
    payload = run_json(capsys, "dim", "--group", "Sp6", "--lambda", "2,2")
    assert payload["result"] == {"dimension": "90"}


def test_tableaux_listing(capsys):
    payload = run_json(capsys, "tableaux", "--group", "Sp6", "--lambda", "2,2",
                       "--weight", "0,0,0")
    assert payload["result"]["count"] == "3"
    texts = [entry["tableau"] for entry in payload["result"]["tableaux"]]
    assert texts == ["2,2/2~,2~", "2,3/2~,3~", "3,3/3~,3~"]


def test_tsv_table(capsys):
    code, out, _ = run(capsys, "branch", "--group", "O2", "--lambda", "1,1",
                       "--format", "tsv")
    assert code == 0
    assert out == "1,1\t1\n"


def test_inputs_echo_roundtrip(capsys):
    payload = run_json(capsys, "branch", "--group", "GL4", "--lambda",
                       "2,1|2,2")
    # the echoed canonical form parses back to the same label
    assert payload["inputs"]["lambda"] == "2,1,-2,-2"
    again = run_json(capsys, "branch", "--group", "GL4", "--lambda",
                     payload["inputs"]["lambda"])
    assert again["result"] == payload["result"]


def test_output_deterministic(capsys):
    first = run_json(capsys, "branch", "--group", "O5", "--lambda", "3,1")
    second = run_json(capsys, "branch", "--group", "O5", "--lambda", "3,1")
    first.pop("elapsed_ms")
    second.pop("elapsed_ms")
    assert first == second


def test_selftest_quick(capsys):
    payload = run_json(capsys, "selftest", "--level", "quick")
    assert payload["result"]["failed"] == 0
    names = [check["name"] for check in payload["result"]["checks"]]
    assert "lr-golden" in names and "worked-examples" in names


def test_stable_branch_gl(capsys):
    payload = run_json(capsys, "stable-branch", "--group", "GL4", "--blocks",
                       "2,2", "--lambda", "1,0,0,-1", "--mu", "0,0;0,0",
                       "--p", "1", "--q", "1")
    assert payload["result"]["multiplicity"] == "1"
    code, _, err = run(capsys, "stable-branch", "--group", "GL4", "--blocks",
                       "2,2", "--lambda", "1,0,0,-1", "--mu", "0,0;0,0")
    assert code == 2 and "--p" in err


def test_branch_table_with_list(capsys):
    payload = run_json(capsys, "branch", "--group", "O2", "--lambda", "1",
                       "--list")
    entries = payload["result"]["tableaux"]
    assert {e["weight"] for e in entries} == {"1,0", "0,1"}
    assert all("/" not in e["tableau"] for e in entries)


def test_console_entry_point(capsys):
    import subprocess
    import sys

    result = subprocess.run(
        [sys.executable, "-m", "branchtab.cli", "branch", "--group", "Sp6",
         "--lambda", "2,2", "--weight", "0,0,0"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert json.loads(result.stdout)["result"]["multiplicity"] == "3"


def test_gl_negative_vector_equals_form(capsys):
    payload = run_json(capsys, "branch", "--group", "GL2", "--lambda=-1,-2")
    assert payload["result"]["table"] == {"-2,-1": "1", "-1,-2": "1"}
    payload = run_json(capsys, "branch", "--group", "GL1", "--lambda", "0")
    assert payload["result"]["table"] == {"0": "1"}


def test_selftest_reports_corruption(capsys, monkeypatch):
    # a deliberately broken closed form must surface a counterexample
    from branchtab import branching, selftest

    real = branching.ballot_number
    monkeypatch.setattr(branching, "ballot_number",
                        lambda x, y: real(x, y) + (x == 2 and y == 1))
    instances, failure = selftest.check_corollary_closure(max_row=3, max_rank=3)
    assert failure is not None and "one-column" in failure
