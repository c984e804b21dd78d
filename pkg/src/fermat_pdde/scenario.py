"""Scenario files: validation, execution and report assembly.

A scenario is a JSON object::

    {
      "name": "demo",
      "mode": "verify" | "construct" | "solve",
      "equation": {"kind": "e1", "dim": 3, "coeffs": [...], "mu": 1, "nu": null,
                   "shift": [...], "g": "<expr>"},
      "f": "<expr>",                       # verify mode
      "construct": {"theorem": "t1", "case": "I", "params": {...}},
      "solve": {"theorem": "t1", "family": "beta", "target": "shift",
                "index": 1, "branch": 0, "weights": [...]},
      "sampling": {"samples": 100, "seed": 20240001, "tol": 1e-6, "radius": 1.0}
    }

Scalars may be numbers, ``[re, im]`` pairs or constant expressions such as
``"2*ln(3)"``.  Everything is validated before anything runs; the first
problem raises :class:`ScenarioError` naming the offending field.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import __version__
from .errors import PddeError, ScenarioError
from .expcore import BACKEND, ExpPoly, Polynomial, ep_equal
from .parser import parse_constant, parse_expression, parse_polynomial
from .pdde import EquationKind, SamplingConfig, make_equation, verify
from .printing import format_exppoly, format_poly
from .solver import (
    RootSearchConfig,
    exponent_relation,
    shift_constraint,
    solve_exponent_parameter,
    solve_shift_component,
)
from .theorems import (
    RELATIONS,
    AuxiliaryFunction,
    CaseIParams,
    Constraint,
    PairExpParams,
    SingleExpParams,
    T2CaseIParams,
    check_constraints,
    construct,
    relation_sides,
)

MODES = ("verify", "construct", "solve")


# field parsing --------------------------------------------------------------


def _scalar(value, where):
    if isinstance(value, bool):
        raise ScenarioError(where, "expected a number")
    if isinstance(value, (int, float, complex)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(isinstance(x, (int, float)) for x in value):
        return complex(value[0], value[1])
    if isinstance(value, str):
        try:
            return parse_constant(value)
        except (PddeError, ValueError, ZeroDivisionError) as exc:
            raise ScenarioError(where, str(exc)) from None
    raise ScenarioError(where, f"expected a number, [re, im] or constant expression, got {value!r}")


def _vector(value, where, length=None, nullable=False):
    if not isinstance(value, (list, tuple)):
        raise ScenarioError(where, "expected a list")
    if length is not None and len(value) != length:
        raise ScenarioError(where, f"expected {length} entries, got {len(value)}")
    out = []
    for i, v in enumerate(value):
        if v is None and nullable:
            out.append(None)
        else:
            out.append(_scalar(v, f"{where}[{i}]"))
    return tuple(out)


def _int(value, where, optional=False):
    if value is None and optional:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(where, f"expected an integer, got {value!r}")
    return value


def _expr(text, dim, where, poly=False):
    if not isinstance(text, str):
        raise ScenarioError(where, "expected an expression string")
    try:
        return parse_polynomial(text, dim) if poly else parse_expression(text, dim)
    except (PddeError, ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(where, str(exc)) from None


def _require(obj, key, where):
    if not isinstance(obj, dict):
        raise ScenarioError(where, "expected an object")
    if key not in obj:
        raise ScenarioError(f"{where}.{key}" if where else key, "missing")
    return obj[key]


# scenario -------------------------------------------------------------------


@dataclass
class Scenario:
    name: str
    mode: str
    kind: EquationKind
    a: tuple
    mu: int
    nu: int | None
    c: tuple
    dim: int
    g: Polynomial | None
    f: ExpPoly | None
    sampling: SamplingConfig
    construct: dict | None = None
    solve: dict | None = None
    raw: dict = field(default_factory=dict, repr=False)

    def equation(self):
        return make_equation(self.kind, self.a, self.mu, self.c, self.g, nu=self.nu)


def _parse_params(theorem, case, p, dim, g, where):
    if not isinstance(p, dict):
        raise ScenarioError(where, "expected an object")

    def poly(key):
        return _expr(p[key], dim, f"{where}.{key}", poly=True) if p.get(key) is not None else None

    def aux():
        if p.get("aux") is None:
            return None
        kind = p.get("aux_kind", "Y1" if theorem == "t1" else "Y")
        if kind not in ("Y1", "Y"):
            raise ScenarioError(f"{where}.aux_kind", "expected 'Y1' or 'Y'")
        return AuxiliaryFunction(_expr(p["aux"], dim, f"{where}.aux"), kind)

    if case == "I" and theorem in ("t3", "t4"):
        sign = p.get("sign", 1)
        if sign not in (1, -1, None):
            raise ScenarioError(f"{where}.sign", "expected 1, -1 or null")
        if g is None:
            raise ScenarioError("equation.g", "case I needs g")
        return CaseIParams(g, sign)
    if case == "I" and theorem == "t2":
        h3 = _expr(_require(p, "h3", where), dim, f"{where}.h3")
        if g is None:
            raise ScenarioError("equation.g", "case I needs g")
        return T2CaseIParams(h3, g)
    if "b" in p or "d" in p:
        return PairExpParams(
            _scalar(p.get("K1", 1), f"{where}.K1"),
            _scalar(p.get("K2", 1), f"{where}.K2"),
            _vector(_require(p, "b", where), f"{where}.b", dim),
            _vector(_require(p, "d", where), f"{where}.d", dim),
            _scalar(p.get("A", 0), f"{where}.A"),
            _scalar(p.get("B", 0), f"{where}.B"),
            poly("periodic1"),
            poly("periodic2"),
            aux(),
        )
    return SingleExpParams(
        _scalar(p.get("K3", 1), f"{where}.K3"),
        _scalar(p.get("K4", 0), f"{where}.K4"),
        _vector(_require(p, "beta", where), f"{where}.beta", dim),
        _scalar(p.get("beta_const", 0), f"{where}.beta_const"),
        poly("periodic"),
        aux(),
    )


def load_scenario(data):
    """Validate a scenario mapping (or JSON text) into a :class:`Scenario`."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ScenarioError("<file>", f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ScenarioError("<root>", "expected an object")
    name = str(data.get("name", "scenario"))
    mode = data.get("mode", "verify")
    if mode not in MODES:
        raise ScenarioError("mode", f"expected one of {', '.join(MODES)}")

    eq = _require(data, "equation", "")
    try:
        kind = EquationKind.parse(_require(eq, "kind", "equation"))
    except ValueError as exc:
        raise ScenarioError("equation.kind", str(exc)) from None
    dim = _int(_require(eq, "dim", "equation"), "equation.dim")
    if dim < 1:
        raise ScenarioError("equation.dim", "must be >= 1")
    a = _vector(_require(eq, "coeffs", "equation"), "equation.coeffs")
    if len(a) not in (3, 4) or (len(a) == 3 and kind not in (EquationKind.E3, EquationKind.E4)):
        raise ScenarioError("equation.coeffs", f"expected 4 coefficients for {kind.value}")
    mu = _int(_require(eq, "mu", "equation"), "equation.mu")
    nu = _int(eq.get("nu"), "equation.nu", optional=True)
    c = _vector(_require(eq, "shift", "equation"), "equation.shift", dim, nullable=(mode == "solve"))
    g = _expr(eq["g"], dim, "equation.g", poly=True) if eq.get("g") is not None else None

    s = data.get("sampling", {}) or {}
    if not isinstance(s, dict):
        raise ScenarioError("sampling", "expected an object")
    try:
        sampling = SamplingConfig(
            sample_count=_int(s.get("samples", 100), "sampling.samples"),
            radius=float(s.get("radius", 1.0)),
            seed=_int(s.get("seed", SamplingConfig.seed), "sampling.seed"),
            tol_rel=float(s.get("tol", 1e-6)),
        )
    except (TypeError, ValueError) as exc:
        raise ScenarioError("sampling", str(exc)) from None

    f = None
    if mode == "verify":
        f = _expr(_require(data, "f", ""), dim, "f")
        if g is None:
            raise ScenarioError("equation.g", "missing")

    cons = data.get("construct")
    if mode == "construct" and cons is None:
        raise ScenarioError("construct", "missing")
    if cons is not None:
        theorem = str(_require(cons, "theorem", "construct")).lower()
        if theorem not in ("t1", "t2", "t3", "t4"):
            raise ScenarioError("construct.theorem", "expected t1..t4")
        case = _require(cons, "case", "construct")
        params = _parse_params(theorem, case, _require(cons, "params", "construct"), dim, g, "construct.params")
        cons = {"theorem": theorem, "case": case, "params": params}

    solve = data.get("solve")
    if mode == "solve":
        if solve is None:
            raise ScenarioError("solve", "missing")
        theorem = str(_require(solve, "theorem", "solve")).lower()
        family = _require(solve, "family", "solve")
        if (theorem, family) not in RELATIONS:
            raise ScenarioError("solve.family", f"no relation {family!r} for {theorem}")
        target = solve.get("target", "shift")
        if target not in ("shift", "weight"):
            raise ScenarioError("solve.target", "expected 'shift' or 'weight'")
        index = _int(_require(solve, "index", "solve"), "solve.index")
        if not 1 <= index <= dim:
            raise ScenarioError("solve.index", f"outside 1..{dim}")
        w = _vector(_require(solve, "weights", "solve"), "solve.weights", dim, nullable=True)
        if target == "shift" and w[index - 1] is None:
            raise ScenarioError("solve.weights", "weight at the unknown index is required")
        for j, v in enumerate(w):
            if v is None and j != index - 1:
                raise ScenarioError(f"solve.weights[{j}]", "only the unknown entry may be null")
        for j, v in enumerate(c):
            if v is None and not (target == "shift" and j == index - 1):
                raise ScenarioError(f"equation.shift[{j}]", "only the unknown entry may be null")
        solve = {
            "theorem": theorem,
            "family": family,
            "target": target,
            "index": index,
            "branch": _int(solve.get("branch", 0), "solve.branch"),
            "weights": w,
            "K3": _scalar(solve.get("K3", 1), "solve.K3"),
            "K4": _scalar(solve.get("K4", 0), "solve.K4"),
        }

    scn = Scenario(name, mode, kind, a, mu, nu, c, dim, g, f, sampling, cons, solve, data)
    if mode != "solve":
        try:
            scn.equation()
        except (PddeError, TypeError, ValueError) as exc:
            raise ScenarioError("equation", str(exc)) from None
    return scn


def load_scenario_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ScenarioError("<file>", str(exc)) from None
    return load_scenario(text)


# execution ------------------------------------------------------------------


def _cplx(z):
    z = complex(z)
    return [z.real, z.imag]


def _echo(scn):
    return {
        "name": scn.name,
        "mode": scn.mode,
        "equation": {
            "kind": scn.kind.value,
            "dim": scn.dim,
            "coeffs": [_cplx(x) for x in scn.a],
            "mu": scn.mu,
            "nu": scn.nu,
            "shift": [None if x is None else _cplx(x) for x in scn.c],
            "g": None if scn.g is None else format_poly(scn.g),
        },
        "sampling": {
            "samples": scn.sampling.sample_count,
            "seed": scn.sampling.seed,
            "tol": scn.sampling.tol_rel,
            "radius": scn.sampling.radius,
        },
    }


def _run_construct(scn, f_given=None):
    block = scn.construct
    con = construct(block["theorem"], scn.a, scn.mu, scn.c, block["params"], block["case"], nu=scn.nu)
    report = check_constraints(con.constraints)
    out = {
        "theorem": block["theorem"],
        "case": block["case"],
        "f": format_exppoly(con.f),
        "g": format_poly(con.g),
        "constraints": report.to_dict(),
    }
    if con.branches:
        out["branches"] = {
            str(s): {"residual_zero": r.is_zero(), "residual_terms": len(r.terms)} for s, r in sorted(con.branches.items())
        }
    if f_given is not None:
        out["matches_f"] = ep_equal(con.f, f_given)
    return con, report, out


def _run_solve(scn):
    sv = scn.solve
    theorem, family, m = sv["theorem"], sv["family"], sv["index"]
    K3, K4 = sv["K3"], sv["K4"]
    if sv["target"] == "shift":
        c = tuple(0j if x is None else x for x in scn.c)
        lc = shift_constraint(theorem, family, scn.a, c, sv["weights"], m, scn.mu, scn.nu, K3, K4)
        lc = type(lc)(lc.weights, lc.target, lc.knowns, lc.m, sv["branch"])
        value = solve_shift_component(lc)
        c = c[: m - 1] + (value,) + c[m:]
        lhs, rhs = relation_sides(theorem, family, scn.a, c, sv["weights"], scn.mu, scn.nu, K3, K4)
        ok = check_constraints([_scalar_con(lhs, rhs)]).all_pass
        return {"target": "shift", "index": m, "branch": sv["branch"], "value": _cplx(value), "pass": ok}, ok
    w = tuple(0j if x is None else x for x in sv["weights"])
    rel = exponent_relation(theorem, family, scn.a, scn.c, w, m, scn.mu, scn.nu, K3, K4)
    roots = solve_exponent_parameter(rel, RootSearchConfig())
    items = []
    for r in roots:
        wr = w[: m - 1] + (r,) + w[m:]
        lhs, rhs = relation_sides(theorem, family, scn.a, scn.c, wr, scn.mu, scn.nu, K3, K4)
        items.append({"value": _cplx(r), "pass": check_constraints([_scalar_con(lhs, rhs)]).all_pass})
    ok = bool(items) and all(it["pass"] for it in items)
    return {"target": "weight", "index": m, "roots": items, "no_root_found": not items}, ok


def _scalar_con(lhs, rhs):
    return Constraint("relation", "scalar", lhs, rhs)


def run_scenario(scn):
    """Execute a validated scenario; returns ``(passed, report_dict)``."""
    t0 = time.perf_counter()
    out = _echo(scn)
    if scn.mode == "verify":
        rep = verify(scn.equation(), scn.f, scn.sampling)
        out["f"] = format_exppoly(scn.f)
        out["verification"] = rep.to_dict()
        passed = rep.verdict.value == "Verified"
        if scn.construct is not None:
            try:
                out["construction"] = _run_construct(scn, scn.f)[2]
            except PddeError as exc:
                out["construction"] = {"error": f"{type(exc).__name__}: {exc}"}
    elif scn.mode == "construct":
        con, report, info = _run_construct(scn)
        rep = verify(con.equation, con.f, scn.sampling)
        out["construction"] = info
        out["verification"] = rep.to_dict()
        passed = report.all_pass and rep.verdict.value == "Verified"
    else:
        out["solution"], passed = _run_solve(scn)
    out["passed"] = passed
    out["elapsed_seconds"] = time.perf_counter() - t0
    return passed, out


def engine_info():
    return {"engine_version": __version__, "backend": BACKEND}


TIMING_FIELDS = ("elapsed_seconds", "total_seconds")


def strip_timing(report):
    """Copy of a report without timing fields, for determinism checks."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k not in TIMING_FIELDS}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report
