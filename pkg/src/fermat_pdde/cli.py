"""Command line interface.

Exit status: 0 when everything passes, 1 on a verification or constraint
failure, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import PddeError, ScenarioError
from .golden import run_golden_suite
from .parser import split_top_level
from .scenario import engine_info, load_scenario, load_scenario_file, run_scenario

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _list(text):
    return [p for p in split_top_level(text) if p] if text is not None else None


def _add_equation_flags(p):
    g = p.add_argument_group("equation")
    g.add_argument("--scenario", metavar="PATH", help="JSON scenario file (flags below override nothing)")
    g.add_argument("--equation", choices=["e1", "e2", "e3", "e4"], type=str.lower)
    g.add_argument("--coeffs", metavar="a1,a2,a3,a4", help="comma-separated constants")
    g.add_argument("--mu", type=int)
    g.add_argument("--nu", type=int)
    g.add_argument("--shift", metavar="c1,...,cn", help="complex entries such as 1+2i or pi*i/3")
    g.add_argument("--g", dest="g_expr", metavar="EXPR", help="exponent polynomial g")
    g.add_argument("--dim", type=int)


def _add_sampling_flags(p):
    g = p.add_argument_group("sampling")
    g.add_argument("--seed", type=int)
    g.add_argument("--samples", type=int)
    g.add_argument("--tol", type=float, help="relative numeric tolerance")


def _add_output_flags(p):
    p.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="fermat-pdde",
        description="Verify, construct and complete solutions of Fermat-type partial differential-difference equations.",
        epilog=__doc__.split("\n\n")[1],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a candidate solution symbolically and numerically")
    _add_equation_flags(v)
    v.add_argument("--f", dest="f_expr", metavar="EXPR", help="candidate solution")
    _add_sampling_flags(v)
    _add_output_flags(v)

    c = sub.add_parser("construct", help="build a solution from theorem parameters and check its constraints")
    _add_equation_flags(c)
    c.add_argument("--theorem", choices=["t1", "t2", "t3", "t4"], type=str.lower)
    c.add_argument("--case")
    c.add_argument("--params", metavar="JSON", help="parameter object, e.g. '{\"beta\": [1,2,3]}'")
    _add_sampling_flags(c)
    _add_output_flags(c)

    s = sub.add_parser("solve", help="recover a missing shift component or exponent weight")
    _add_equation_flags(s)
    s.add_argument("--theorem", choices=["t1", "t2", "t3", "t4"], type=str.lower)
    s.add_argument("--family", choices=["beta", "b", "d"])
    s.add_argument("--target", choices=["shift", "weight"], default="shift")
    s.add_argument("--index", type=int, help="1-based index of the unknown")
    s.add_argument("--branch", type=int, default=0, help="logarithm branch for shift targets")
    s.add_argument("--weights", metavar="w1,...,wn", help="exponent weights; use '?' for the unknown")
    s.add_argument("--K3", default="1")
    s.add_argument("--K4", default="0")
    _add_output_flags(s)

    e = sub.add_parser("examples", help="run the built-in reference suite")
    e.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="[NAME:]FIELD=VALUE",
        help="perturb a scenario field (a1..a4, c1..cn, mu, nu, f, g, seed, samples, tol); repeatable",
    )
    e.add_argument("--corrected", action="store_true", help="use the consistent shift for e2-a")
    _add_sampling_flags(e)
    _add_output_flags(e)
    return ap


def _scenario_from_flags(args, mode):
    if args.scenario:
        return load_scenario_file(args.scenario)
    missing = [n for n in ("equation", "coeffs", "mu", "shift") if getattr(args, n) is None]
    if mode != "solve" and args.g_expr is None:
        missing.append("g")
    if missing:
        raise ScenarioError("--" + missing[0], "required without --scenario")
    shift = [None if x == "?" else x for x in _list(args.shift)]
    data = {
        "name": "cli",
        "mode": mode,
        "equation": {
            "kind": args.equation,
            "dim": args.dim if args.dim is not None else len(shift),
            "coeffs": _list(args.coeffs),
            "mu": args.mu,
            "nu": args.nu,
            "shift": shift,
            "g": args.g_expr,
        },
    }
    sampling = {k: v for k, v in (("seed", getattr(args, "seed", None)), ("samples", getattr(args, "samples", None)), ("tol", getattr(args, "tol", None))) if v is not None}
    if sampling:
        data["sampling"] = sampling
    if mode == "verify":
        if args.f_expr is None:
            raise ScenarioError("--f", "required without --scenario")
        data["f"] = args.f_expr
    elif mode == "construct":
        if args.theorem is None or args.case is None:
            raise ScenarioError("--theorem" if args.theorem is None else "--case", "required without --scenario")
        try:
            params = json.loads(args.params) if args.params else {}
        except json.JSONDecodeError as exc:
            raise ScenarioError("--params", f"invalid JSON: {exc}") from None
        data["construct"] = {"theorem": args.theorem, "case": args.case, "params": params}
    else:
        for n in ("theorem", "family", "index", "weights"):
            if getattr(args, n) is None:
                raise ScenarioError("--" + n, "required without --scenario")
        data["solve"] = {
            "theorem": args.theorem,
            "family": args.family,
            "target": args.target,
            "index": args.index,
            "branch": args.branch,
            "weights": [None if x == "?" else x for x in _list(args.weights)],
            "K3": args.K3,
            "K4": args.K4,
        }
    return load_scenario(data)


def _emit(report, path):
    text = json.dumps(report, indent=2, sort_keys=True)
    if path == "-":
        print(text)
    elif path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _summary(rep):
    name = rep.get("name", "?")
    if "verification" in rep:
        v = rep["verification"]
        line = f"{name}: {v['verdict']} (relative residual {v['relative_residual']:.2e}, {v['residual_terms']} residual terms)"
    elif "solution" in rep:
        sol = rep["solution"]
        if sol["target"] == "shift":
            re, im = sol["value"]
            line = f"{name}: c{sol['index']} = {complex(re, im)} (branch {sol['branch']})"
        else:
            vals = ", ".join(str(complex(*r["value"])) for r in sol["roots"]) or "no root found"
            line = f"{name}: roots {vals}"
    else:
        line = name
    built = rep.get("construction", {})
    if rep.get("mode") == "construct" and "f" in built:
        line += f"\n  f = {built['f']}"
    cons = built.get("constraints")
    if cons is not None and not cons["all_pass"]:
        bad = [it["label"] for it in cons["items"] if not it["pass"]]
        line += f"; failed constraints: {'; '.join(bad)}"
    return line


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "examples":
            sampling = None
            if any(x is not None for x in (args.seed, args.samples, args.tol)):
                sampling = {k: v for k, v in (("seed", args.seed), ("samples", args.samples), ("tol", args.tol)) if v is not None}
            ok, report = run_golden_suite(args.override, args.corrected, sampling)
            for rep in report["scenarios"]:
                print(_summary(rep))
            print(f"{report['verified']}/{report['total']} verified")
        else:
            scn = _scenario_from_flags(args, args.command)
            ok, report = run_scenario(scn)
            report = {**engine_info(), **report}
            print(_summary(report))
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PddeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(report, args.json)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
