import json
import subprocess
import sys

import pytest

from squareice.cli import CHECKS, ConfigError, main, parse_cyc, parse_eval, plan_checks
from squareice.cyclo import CycNum


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_partition_eval_json(capsys):
    code, out, _ = run(capsys, "partition", "--model", "dwbc", "--size", "2",
                       "--mode", "omega6", "--eval", "all=1")
    assert code == 0
    assert json.loads(out) == {"model": "dwbc", "n": 2, "mode": "omega6",
                               "value": {"p": "18", "q": "0"}, "state_count": 2}


def test_partition_symbolic_json(capsys):
    code, out, _ = run(capsys, "partition", "--size", "1")
    obj = json.loads(out)
    assert code == 0 and obj["state_count"] == 1 and obj["mode"] == "generic-a"


def test_counts_text(capsys):
    code, out, _ = run(capsys, "counts", "--sizes", "1..4", "--format", "text")
    assert code == 0
    assert [line.split()[1] for line in out.splitlines()[1:]] == ["1", "2", "7", "42"]


def test_counts_half_turn_json(capsys):
    code, out, _ = run(capsys, "counts", "--model", "ht-odd", "--sizes", "1,2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["states"] for r in rows] == [3, 25]


def test_enumerate_lists_asms(capsys):
    code, out, _ = run(capsys, "enumerate", "--size", "3")
    assert code == 0 and len(out.splitlines()) == 7


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--size", "2", "--mode", "omega6",
               "--checks", "theorem-main")[0] == 0
    code, out, _ = run(capsys, "verify", "--size", "3", "--checks", "theorem-main")
    assert code == 1 and json.loads(out)["verdict"] == "fail"


def test_verify_output_is_deterministic(capsys):
    argv = ("verify", "--model", "tangle", "--size", "1")
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    assert "elapsed_ms" not in first
    assert "elapsed_ms" in run(capsys, *argv, "--timing")[1]


def test_unknown_check_rejected_before_work(capsys):
    code, out, err = run(capsys, "verify", "--size", "3", "--checks", "half-width,bogus")
    assert code == 2 and out == "" and "bogus" in err


def test_check_not_applicable_to_model():
    with pytest.raises(ConfigError):
        plan_checks("tangle", "generic-a", ["theorem-main"])
    with pytest.raises(ConfigError):
        plan_checks("dwbc", "generic-a", ["homogeneous-counts"])


def test_default_plans_use_registered_checks():
    for model in ("dwbc", "ht-even", "ht-odd", "tangle"):
        for mode in ("generic-a", "omega6"):
            assert set(plan_checks(model, mode)) <= set(CHECKS)
    assert "pseudo-sym" not in plan_checks("ht-odd", "generic-a")


def test_generic_eval_needs_a(capsys):
    code, _, err = run(capsys, "partition", "--size", "2", "--eval", "all=1")
    assert code == 2 and "a: generic-a mode needs a value" in err


def test_generic_eval_at_omega6_matches_omega6_mode(capsys):
    generic = run(capsys, "partition", "--size", "2", "--eval", "all=1,a=a")[1]
    omega = run(capsys, "partition", "--size", "2", "--mode", "omega6", "--eval", "all=1")[1]
    assert json.loads(generic)["value"] == json.loads(omega)["value"] == {"p": "18", "q": "0"}


def test_omega6_eval_rejects_a(capsys):
    code, _, err = run(capsys, "partition", "--size", "1", "--mode", "omega6",
                       "--eval", "all=1,a=2")
    assert code == 2 and "a: fixed" in err


def test_eval_errors_reported_per_variable():
    with pytest.raises(ConfigError) as exc:
        parse_eval("x1=0,y1=zz", ["x1", "y1", "x2"])
    msg = str(exc.value)
    assert "x1: value must be nonzero" in msg and "y1:" in msg and "x2: no value given" in msg


@pytest.mark.parametrize("text, want", [
    ("2", CycNum(2)), ("-1/2", CycNum(-1, 0) / 2), ("a", CycNum(0, 1)),
    ("1+a", CycNum(1, 1)), ("3-2/5a", CycNum(3, 0) - CycNum(0, 2) / 5), ("-a", CycNum(0, -1)),
])
def test_parse_cyc(text, want):
    assert parse_cyc(text) == want


@pytest.mark.parametrize("text", ["", "1a", "x", "1+", "1/0"])
def test_parse_cyc_rejects(text):
    with pytest.raises(ValueError):
        parse_cyc(text)


def test_bad_trials_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--size", "2", "--trials", "0"])
    assert exc.value.code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "z.json"
    assert main(["partition", "--size", "1", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["state_count"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "squareice", "counts", "--sizes", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["states"] == 7
