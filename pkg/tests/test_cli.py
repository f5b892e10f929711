import json

import pytest

from tanglegcd.cli import main
from tanglegcd.euclid import run_negative, step_count, trace_to_dict


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gcd_lar_text_golden(capsys):
    code, out, _ = run_cli(capsys, "gcd", "807", "673", "--method", "lar")
    assert code == 0
    assert out.splitlines() == [
        "807 = 673(1)+134",
        "673 = 134(5)+3",
        "134 = 3(45)-1",
        "3 = 1(3)+0",
        "",
        "gcd: 1",
        "divisions: 4",
        "subtractions: 54",
        "swaps: 3",
        "total steps: 57",
    ]


def test_gcd_exact_division(capsys):
    code, out, _ = run_cli(capsys, "gcd", "10", "5", "--method", "regular")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "10 = 5(2)+0"
    assert "gcd: 5" in lines


def test_gcd_negative_matches_library(capsys):
    code, out, _ = run_cli(capsys, "--json", "gcd", "21", "13", "--method", "negative")
    assert code == 0
    payload = json.loads(out)
    trace = run_negative(21, 13)
    assert payload["trace"] == trace_to_dict(trace)
    assert payload["total_steps"] == step_count(trace).total


def test_gcd_json_schema(capsys):
    code, out, _ = run_cli(capsys, "gcd", "8", "5", "--method", "lar", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["trace"]["variant"] == "LeastAbsolute"
    assert payload["trace"]["steps"][0] == {"a": 8, "b": 5, "q": 2, "eps": -1, "r": 2}
    for step in payload["trace"]["steps"]:
        assert set(step) == {"a", "b", "q", "eps", "r"}


def test_gcd_swaps_misordered_inputs_with_notice(capsys):
    code, out, err = run_cli(capsys, "gcd", "673", "807")
    assert code == 0
    assert "swapped" in err
    assert out.splitlines()[0] == "807 = 673(1)+134"


def test_steps_807_673(capsys):
    code, out, _ = run_cli(capsys, "--json", "steps", "807", "673")
    assert code == 0
    rows = {row["method"]: row for row in json.loads(out)["rows"]}
    assert rows["regular"]["total"] == 57
    assert rows["lar"]["total"] == 57
    assert rows["negative"]["total"] == 65
    assert rows["negative"]["total"] >= 57
    assert rows["lar"]["divisions"] == 4


def test_steps_5_3(capsys):
    code, out, _ = run_cli(capsys, "--json", "steps", "5", "3")
    rows = {row["method"]: row for row in json.loads(out)["rows"]}
    assert rows["regular"]["total"] == 6
    assert rows["lar"]["total"] == 6


def test_steps_exact_multiple(capsys):
    code, out, _ = run_cli(capsys, "--json", "steps", "9", "3")
    rows = json.loads(out)["rows"]
    assert all(row["total"] == 3 for row in rows)


def test_enumerate_4_3(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "4", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0] == "#1 quotients=[1,3] epsilons=[+,+] total=5 *min-steps *min-divisions"
    assert lines[-1] == "summary: 3 traces, min total steps 5, min divisions 2"


def test_enumerate_3_2(capsys):
    _, out, _ = run_cli(capsys, "--json", "enumerate", "3", "2")
    payload = json.loads(out)
    assert payload["traces_examined"] == 2
    assert len(payload["traces"]) == 2


def test_enumerate_5_2(capsys):
    _, out, _ = run_cli(capsys, "--json", "enumerate", "5", "2")
    payload = json.loads(out)
    assert payload["traces_examined"] == 2
    assert payload["min_total_steps"] == 5


def test_enumerate_bound_diagnostic(capsys):
    code, out, err = run_cli(capsys, "enumerate", "10001", "3")
    assert code == 2
    assert out == ""
    assert "--limit" in err


def test_enumerate_limit_override(capsys):
    code, out, _ = run_cli(capsys, "--json", "enumerate", "10001", "3", "--limit", "10001")
    assert code == 0
    assert json.loads(out)["traces_examined"] == 3


@pytest.mark.parametrize(
    "method,moves",
    [
        ("regular", "-T,R,T,R,-T,R,T,T"),
        ("lar", "-T,-T,R,-T,-T,R,T,T"),
        ("negative", "-T,-T,R,-T,-T,-T,R,-T,-T"),
    ],
)
def test_untangle_8_5_golden(capsys, method, moves):
    code, out, _ = run_cli(capsys, "untangle", "8/5", "--method", method)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"moves: {moves}"
    assert lines[-1] == "verified: pass"


def test_untangle_zero(capsys):
    code, out, _ = run_cli(capsys, "--json", "untangle", "0")
    payload = json.loads(out)
    assert code == 0
    assert payload["moves"] == ""
    assert payload["total"] == 0
    assert payload["verified"] is True


def test_untangle_mirror(capsys):
    code, out, _ = run_cli(capsys, "untangle", "-8/5", "--method", "lar")
    assert code == 0
    assert out.splitlines()[0] == "moves: T,T,R,T,T,R,-T,-T"


def test_untangle_unreduced_input_is_canonicalized(capsys):
    code, out, _ = run_cli(capsys, "--json", "untangle", "16/10", "--method", "lar")
    payload = json.loads(out)
    assert payload["fraction"] == "8/5"
    assert payload["moves"] == "-T,-T,R,-T,-T,R,T,T"


def test_untangle_json_metrics(capsys):
    _, out, _ = run_cli(capsys, "--json", "untangle", "8/5", "--method", "lar")
    payload = json.loads(out)
    assert (payload["twists"], payload["rotations"], payload["total"]) == (6, 2, 8)
    assert payload["values"][0] == "8/5"
    assert payload["values"][-1] == "0"


def test_untangle_output_passes_its_own_verify(capsys):
    _, out, _ = run_cli(capsys, "--json", "untangle", "7/9", "--method", "negative")
    moves = json.loads(out)["moves"]
    code, out, _ = run_cli(capsys, "verify", "7/9", "--moves", moves)
    assert code == 0
    assert out.splitlines()[-1] == "result: pass"


def test_construct_seven_halves(capsys):
    code, out, _ = run_cli(capsys, "construct", "--moves", "-T,-T,-T,R,-T,R,T,T")
    assert code == 0
    assert out.strip() == "7/2"


def test_construct_json(capsys):
    _, out, _ = run_cli(capsys, "--json", "construct", "--moves", "-T,-T,-T,R,-T,R,T,T")
    assert json.loads(out)["tangle_number"] == "7/2"


def test_construct_parse_error(capsys):
    code, out, err = run_cli(capsys, "construct", "--moves", "T,Q,R")
    assert code == 2
    assert out == ""
    assert "'Q'" in err
    assert "position 2" in err


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "8/5", "--moves", "-T,R,T,R,-T,R,T,T")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "start: 8/5"
    assert lines[-2] == "final: 0"
    assert lines[-1] == "result: pass"


def test_verify_fail(capsys):
    code, out, _ = run_cli(capsys, "verify", "1", "--moves", "R")
    assert code == 1
    lines = out.splitlines()
    assert "final: -1" in lines
    assert lines[-1] == "result: fail"


def test_verify_json_reports_values(capsys):
    code, out, _ = run_cli(capsys, "--json", "verify", "1", "--moves", "R")
    assert code == 1
    payload = json.loads(out)
    assert payload["pass"] is False
    assert payload["values"] == ["1", "-1"]


def test_json_flag_accepted_before_and_after_subcommand(capsys):
    _, before, _ = run_cli(capsys, "--json", "steps", "8", "5")
    _, after, _ = run_cli(capsys, "steps", "8", "5", "--json")
    assert json.loads(before) == json.loads(after)


@pytest.mark.parametrize("argv", [["gcd", "0", "5"], ["gcd", "x", "5"], ["steps", "-3", "5"]])
def test_nonpositive_or_malformed_integers_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == 2


def test_indeterminate_fraction_diagnostic(capsys):
    code, _, err = run_cli(capsys, "untangle", "0/0")
    assert code == 2
    assert "indeterminate" in err


def test_bad_fraction_diagnostic(capsys):
    code, _, err = run_cli(capsys, "verify", "one", "--moves", "R")
    assert code == 2
    assert "one" in err
