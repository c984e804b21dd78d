"""Built-in reference scenarios: one known solution per parameter family.

Each entry carries the solution ``f`` as text and the constructor
parameters that should reproduce it.  ``e2-a`` ships with a shift whose
first component is inconsistent with its solution; ``corrected=True``
substitutes the value that satisfies the side condition.
"""
from __future__ import annotations

import copy
import time

from .errors import ScenarioError
from .scenario import engine_info, load_scenario, run_scenario

E2A_CORRECTED_C1 = "(1/12)*ln((21*sqrt(2)-1)/(3*sqrt(2)))"

_SCENARIOS = [
    {
        "name": "e1-a",
        "equation": {
            "kind": "e1",
            "dim": 3,
            "coeffs": ["3", "5", "-3", "1"],
            "mu": 1,
            "shift": ["(2/5)*ln(4/15)", "ln(15/4)", "ln(4/15)"],
            "g": "z2^2+z3^2+2*z2*z3+5*z1+7*z2+3*z3+1",
        },
        "f": "(2/15)*e^((z2^2+z3^2+2*z2*z3+5*z1+7*z2+3*z3+1)/2)",
        "construct": {
            "theorem": "t1",
            "case": "I",
            "params": {"K3": 1, "K4": 0, "beta": [5, 7, 3], "beta_const": 1, "periodic": "(z2+z3)^2"},
        },
    },
    {
        "name": "e1-b",
        "equation": {
            "kind": "e1",
            "dim": 3,
            "coeffs": ["2", "1", "3", "5"],
            "mu": 1,
            "shift": ["2*ln(3)", "-ln(4)", "2*pi*i/3"],
            "g": "z1+2*z2+3*z3+5",
        },
        "f": "e^((z1+2*z2+3*z3+5)/2)",
        "construct": {"theorem": "t1", "case": "I", "params": {"K3": 1, "K4": 0, "beta": [1, 2, 3], "beta_const": 5}},
    },
    {
        "name": "e1-c",
        "equation": {
            "kind": "e1",
            "dim": 3,
            "coeffs": ["3*pi", "5*pi^2", "5*pi^2", "1"],
            "mu": 1,
            "shift": ["3", "-1", "1"],
            "g": "pi*i*(5*z1+3*z2+7*z3)+12",
        },
        "f": "1/(12*pi^2*i)*e^(pi*i*(2*z1+z2+3*z3)+7)+1/(18*pi^2*i)*e^(pi*i*(3*z1+2*z2+4*z3)+5)",
        "construct": {
            "theorem": "t1",
            "case": "II",
            "params": {
                "K1": 1,
                "K2": 1,
                "b": ["2*pi*i", "pi*i", "3*pi*i"],
                "d": ["3*pi*i", "2*pi*i", "4*pi*i"],
                "A": 7,
                "B": 5,
            },
        },
    },
    {
        "name": "e2-a",
        "equation": {
            "kind": "e2",
            "dim": 3,
            "coeffs": ["3", "2", "3", "4"],
            "mu": 1,
            "nu": 2,
            "shift": ["(1/12)*ln((27*sqrt(2)-1)/(3*sqrt(2)))", "pi*i/12", "pi*i/2"],
            "g": "24*z1+12*z2+2*z3+18",
        },
        "f": "e^(12*z1+6*z2+z3+9)",
        "construct": {"theorem": "t2", "case": "I", "params": {"h3": "e^(12*z1+6*z2+z3+9)"}},
    },
    {
        "name": "e2-b",
        "equation": {
            "kind": "e2",
            "dim": 3,
            "coeffs": ["2", "2", "3", "4/(3*i)"],
            "mu": 1,
            "nu": 2,
            "shift": ["pi*i", "pi*i", "2*pi*i"],
            "g": "6*z2+2*z3+16",
        },
        "f": "(3*i-2)*e^(2*z1+3*z2+(1/2)*z3+7)/(2*i*(12+8*i))+(3*i+2)*e^(-2*z1+3*z2+(3/2)*z3+9)/(2*i*(-12+8*i))",
        "construct": {
            "theorem": "t2",
            "case": "II-pair",
            "params": {"K1": 1, "K2": 1, "b": [2, 3, 0.5], "d": [-2, 3, 1.5], "A": 7, "B": 9},
        },
    },
    {
        "name": "e3-a",
        "equation": {
            "kind": "e3",
            "dim": 3,
            "coeffs": ["5", "-6", "4"],
            "mu": 1,
            "shift": ["1", "2", "3"],
            "g": "3*z1+5*z2+z3+7",
        },
        "f": "e^((3*z1+5*z2+z3-9)/2)/5",
        "construct": {"theorem": "t3", "case": "I", "params": {"sign": 1}},
    },
    {
        "name": "e3-b",
        "equation": {
            "kind": "e3",
            "dim": 3,
            "coeffs": ["2*i", "5", "-3"],
            "mu": 1,
            "shift": ["-pi*i", "pi*i", "3*pi*i"],
            "g": "(3*z2-z3)^3+(3*z2-z3)^2+3*z1+8*z2+3*z3+12",
        },
        "f": "1/(4*i)*e^((3*z2-z3)^3+z1+3*z2+2*z3+7)+1/(4*i)*e^((3*z2-z3)^2+2*z1+5*z2+z3+5)",
        "construct": {
            "theorem": "t3",
            "case": "II-pair",
            "params": {
                "K1": 1,
                "K2": 1,
                "b": [1, 3, 2],
                "d": [2, 5, 1],
                "A": 7,
                "B": 5,
                "periodic1": "(3*z2-z3)^3",
                "periodic2": "(3*z2-z3)^2",
            },
        },
    },
    {
        "name": "e4-a",
        "equation": {
            "kind": "e4",
            "dim": 3,
            "coeffs": ["2", "6", "4"],
            "mu": 1,
            "nu": 2,
            "shift": ["pi*i", "3", "-pi*i"],
            "g": "7*z1-3*z2+5*z3+9",
        },
        "f": "e^((7*z1-3*z2+5*z3+18)/2)/2",
        "construct": {"theorem": "t4", "case": "I", "params": {"sign": -1}},
    },
    {
        "name": "e4-b",
        "equation": {
            "kind": "e4",
            "dim": 3,
            "coeffs": ["-12*i", "-9", "5"],
            "mu": 1,
            "nu": 2,
            "shift": ["-pi*i", "pi*i", "pi*i"],
            "g": "5*z1+4*z2+9*z3+12",
        },
        "f": "1/(24*i)*e^(2*z1+3*z2+4*z3+5)+1/(24*i)*e^(3*z1+z2+5*z3+7)",
        "construct": {
            "theorem": "t4",
            "case": "II-pair",
            "params": {"K1": 1, "K2": 1, "b": [2, 3, 4], "d": [3, 1, 5], "A": 5, "B": 7},
        },
    },
]

NAMES = tuple(s["name"] for s in _SCENARIOS)


def golden_scenarios(corrected=False):
    """Fresh copies of the reference scenario dicts."""
    out = copy.deepcopy(_SCENARIOS)
    if corrected:
        for s in out:
            if s["name"] == "e2-a":
                s["equation"]["shift"][0] = E2A_CORRECTED_C1
    return out


def parse_override(text):
    """``"NAME:FIELD=VALUE"`` (or ``"FIELD=VALUE"`` for every scenario)."""
    if "=" not in text:
        raise ScenarioError("--override", f"expected [NAME:]FIELD=VALUE, got {text!r}")
    key, value = text.split("=", 1)
    name, _, fld = key.rpartition(":")
    fld = fld.strip()
    if not fld:
        raise ScenarioError("--override", "empty field name")
    return (name.strip() or None), fld, value.strip()


def apply_override(scenario, fld, value):
    """Set ``a<i>``, ``c<j>``, ``mu``, ``nu``, ``f``, ``g``, ``seed``, ``samples`` or ``tol``."""
    eq = scenario["equation"]
    if fld[0] in "ac" and fld[1:].isdigit():
        target = eq["coeffs"] if fld[0] == "a" else eq["shift"]
        i = int(fld[1:])
        if not 1 <= i <= len(target):
            raise ScenarioError(f"--override {fld}", f"index outside 1..{len(target)}")
        target[i - 1] = value
    elif fld in ("mu", "nu"):
        try:
            eq[fld] = int(value)
        except ValueError:
            raise ScenarioError(f"--override {fld}", "expected an integer") from None
    elif fld in ("f", "g"):
        if fld == "f":
            scenario["f"] = value
        else:
            eq["g"] = value
    elif fld in ("seed", "samples", "tol"):
        try:
            scenario.setdefault("sampling", {})[fld] = float(value) if fld == "tol" else int(value)
        except ValueError:
            raise ScenarioError(f"--override {fld}", "expected a number") from None
    else:
        raise ScenarioError(f"--override {fld}", "unknown field")


def run_golden_suite(overrides=(), corrected=False, sampling=None):
    """Verify every reference scenario; returns ``(all_verified, report)``.

    ``sampling`` optionally replaces the sampling block of each scenario.
    All scenarios and overrides are validated before any of them runs.
    """
    scenarios = golden_scenarios(corrected)
    by_name = {s["name"]: s for s in scenarios}
    for text in overrides:
        name, fld, value = parse_override(text)
        if name is not None and name not in by_name:
            raise ScenarioError("--override", f"unknown scenario {name!r}")
        for s in scenarios if name is None else [by_name[name]]:
            apply_override(s, fld, value)
    if sampling is not None:
        for s in scenarios:
            s["sampling"] = dict(sampling)
    loaded = [load_scenario(s) for s in scenarios]
    t0 = time.perf_counter()
    results = []
    all_ok = True
    for scn in loaded:
        ok, rep = run_scenario(scn)
        all_ok &= ok
        results.append(rep)
    report = {
        **engine_info(),
        "suite": "golden",
        "corrected": corrected,
        "overrides": list(overrides),
        "scenarios": results,
        "verified": sum(r["passed"] for r in results),
        "total": len(results),
        "passed": all_ok,
        "total_seconds": time.perf_counter() - t0,
    }
    return all_ok, report
