import copy
import json

import pytest

from fermat_pdde.cli import main
from fermat_pdde.errors import ScenarioError
from fermat_pdde.golden import NAMES, golden_scenarios, parse_override, run_golden_suite
from fermat_pdde.scenario import load_scenario, run_scenario, strip_timing

E1B = [
    "--equation", "e1",
    "--coeffs", "2,1,3,5",
    "--mu", "1",
    "--shift", "2*ln(3),-ln(4),2*pi*i/3",
    "--g", "z1+2*z2+3*z3+5",
]  # fmt: skip


def _base():
    d = golden_scenarios()[1]
    d["mode"] = "verify"
    return d


@pytest.mark.parametrize(
    "mutate,field",
    [
        (lambda d: d["equation"].pop("mu"), "equation.mu"),
        (lambda d: d["equation"].__setitem__("coeffs", ["1", "x+"]), "equation.coeffs[1]"),
        (lambda d: d["equation"].__setitem__("shift", [1, 2]), "equation.shift"),
        (lambda d: d.__setitem__("mode", "bogus"), "mode"),
        (lambda d: d["equation"].__setitem__("kind", "e9"), "equation.kind"),
        (lambda d: d.__setitem__("f", "e^(e^z1)"), "f"),
        (lambda d: d.__setitem__("sampling", {"samples": 0}), "sampling"),
    ],
)
def test_scenario_validation_names_field(mutate, field):
    d = _base()
    mutate(d)
    with pytest.raises(ScenarioError) as info:
        load_scenario(d)
    assert info.value.field == field


def test_scenario_accepts_json_text():
    scn = load_scenario(json.dumps(_base()))
    ok, rep = run_scenario(scn)
    assert ok and rep["verification"]["verdict"] == "Verified"


def test_golden_suite_is_deterministic():
    _, r1 = run_golden_suite()
    _, r2 = run_golden_suite()
    assert strip_timing(r1) == strip_timing(r2)
    assert "total_seconds" in r1 and "total_seconds" not in strip_timing(r1)


def test_golden_suite_flags_printed_e2a_shift():
    ok, rep = run_golden_suite()
    verdicts = {s["name"]: s["verification"]["verdict"] for s in rep["scenarios"]}
    assert not ok
    assert [n for n, v in verdicts.items() if v != "Verified"] == ["e2-a"]
    ok, rep = run_golden_suite(corrected=True)
    assert ok and rep["verified"] == len(NAMES)


def test_override_perturbs_single_scenario():
    ok, rep = run_golden_suite(["e1-c:a2=5*pi^2+1"], corrected=True)
    assert not ok
    bad = [s["name"] for s in rep["scenarios"] if not s["passed"]]
    assert bad == ["e1-c"]


def test_override_parsing():
    assert parse_override("e1-a:a1=3") == ("e1-a", "a1", "3")
    assert parse_override("seed=4") == (None, "seed", "4")
    with pytest.raises(ScenarioError):
        parse_override("a1")
    with pytest.raises(ScenarioError):
        run_golden_suite(["nope:a1=1"])
    with pytest.raises(ScenarioError):
        run_golden_suite(["e1-a:a9=1"])


def test_cli_verify_ok(capsys):
    assert main(["verify", *E1B, "--f", "e^((z1+2*z2+3*z3+5)/2)"]) == 0
    assert "Verified" in capsys.readouterr().out


def test_cli_verify_failure_exit_code():
    assert main(["verify", *E1B, "--f", "e^((z1+2*z2+3*z3+5)/3)"]) == 1


def test_cli_input_errors(capsys):
    assert main(["verify", *E1B[:-2], "--f", "e^z1"]) == 2
    assert "--g" in capsys.readouterr().err
    args = ["verify", *E1B, "--f", "e^z1"]
    args[args.index("--coeffs") + 1] = "2,1,,"
    assert main(args) == 2


def test_cli_json_report(tmp_path):
    out = tmp_path / "rep.json"
    assert main(["verify", *E1B, "--f", "e^((z1+2*z2+3*z3+5)/2)", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["verification"]["verdict"] == "Verified"
    assert rep["backend"] in ("cython", "python")
    assert rep["equation"]["coeffs"] == [[2.0, 0.0], [1.0, 0.0], [3.0, 0.0], [5.0, 0.0]]


def test_cli_solve_shift(capsys):
    args = ["solve", *E1B[:-2], "--theorem", "t1", "--family", "beta", "--index", "1", "--weights", "1,2,3"]
    args[args.index("--shift") + 1] = "?,-ln(4),2*pi*i/3"
    assert main(args) == 0
    assert "2.19722" in capsys.readouterr().out


def test_cli_solve_weight(capsys):
    args = [
        "solve",
        "--equation", "e1",
        "--coeffs", "3,5,-3,1",
        "--mu", "1",
        "--shift", "(2/5)*ln(4/15),ln(15/4),ln(4/15)",
        "--theorem", "t1",
        "--family", "beta",
        "--target", "weight",
        "--index", "1",
        "--weights", "?,7,3",
    ]  # fmt: skip
    assert main(args) == 0
    assert "(5+0j)" in capsys.readouterr().out


def test_cli_construct_reports_failed_constraints(capsys):
    params = json.dumps({"K3": 1, "K4": 1, "beta": [1, 2, 3], "beta_const": 5})
    code = main(["construct", *E1B, "--theorem", "t1", "--case", "I", "--params", params])
    assert code == 1
    assert "failed constraints" in capsys.readouterr().out


def test_cli_scenario_file(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(_base()))
    assert main(["verify", "--scenario", str(path)]) == 0
    broken = copy.deepcopy(_base())
    broken["equation"]["mu"] = 9
    path.write_text(json.dumps(broken))
    assert main(["verify", "--scenario", str(path)]) == 2


def test_cli_examples_exit_codes():
    assert main(["examples"]) == 1
    assert main(["examples", "--corrected"]) == 0
