import cmath
import math
import zlib

import numpy as np
import pytest

from fermat_pdde.errors import CaseMismatch, DegenerateDenominator, ZeroBetaMu
from fermat_pdde.expcore import ExpPoly, Polynomial, ep_equal, ep_is_zero, ep_order, ep_partial, ep_shift
from fermat_pdde.golden import E2A_CORRECTED_C1
from fermat_pdde.parser import parse_constant
from fermat_pdde.pdde import Verdict, verify
from fermat_pdde.testing import random_theorem_instance
from fermat_pdde.theorems import (
    AuxiliaryFunction,
    CaseIParams,
    Constraint,
    PairExpParams,
    SingleExpParams,
    T2CaseIParams,
    check_constraints,
    construct,
    construct_t1,
    construct_t2,
    construct_t3,
    construct_t4,
    particular_y1_aux,
)

PI = math.pi
L = cmath.log


def _scalars(con):
    return [(it.lhs, it.rhs) for it in con.check().items if it.kind == "scalar"]


def _e1a(P):
    params = SingleExpParams(1, 0, (5, 7, 3), 1, P("(z2+z3)^2", 3))
    return construct_t1((3, 5, -3, 1), 1, (0.4 * L(4 / 15), L(15 / 4), L(4 / 15)), params, "I")


def _e1b():
    return construct_t1((2, 1, 3, 5), 1, (2 * L(3), -L(4), 2j * PI / 3), SingleExpParams(1, 0, (1, 2, 3), 5), "I")


def _e2a(P, E, c1):
    c = (parse_constant(c1), 1j * PI / 12, 1j * PI / 2)
    h3 = E("e^(12*z1+6*z2+z3+9)", 3)
    return construct_t2((3, 2, 3, 4), 1, 2, c, T2CaseIParams(h3, P("24*z1+12*z2+2*z3+18", 3)), "I")


def _reference_constructions(P, E):
    yield "e1-a", _e1a(P), "(2/15)*e^((z2^2+z3^2+2*z2*z3+5*z1+7*z2+3*z3+1)/2)"
    yield "e1-b", _e1b(), "e^((z1+2*z2+3*z3+5)/2)"
    pair = PairExpParams(1, 1, tuple(1j * PI * x for x in (2, 1, 3)), tuple(1j * PI * x for x in (3, 2, 4)), 7, 5)
    yield (
        "e1-c",
        construct_t1((3 * PI, 5 * PI**2, 5 * PI**2, 1), 1, (3, -1, 1), pair, "II"),
        "1/(12*pi^2*i)*e^(pi*i*(2*z1+z2+3*z3)+7)+1/(18*pi^2*i)*e^(pi*i*(3*z1+2*z2+4*z3)+5)",
    )
    yield "e2-a", _e2a(P, E, E2A_CORRECTED_C1), "e^(12*z1+6*z2+z3+9)"
    pair = PairExpParams(1, 1, (2, 3, 0.5), (-2, 3, 1.5), 7, 9)
    yield (
        "e2-b",
        construct_t2((2, 2, 3, 4 / 3j), 1, 2, (1j * PI, 1j * PI, 2j * PI), pair, "II-pair"),
        "(3*i-2)*e^(2*z1+3*z2+(1/2)*z3+7)/(2*i*(12+8*i))+(3*i+2)*e^(-2*z1+3*z2+(3/2)*z3+9)/(2*i*(-12+8*i))",
    )
    yield (
        "e3-a",
        construct_t3((5, -6, 4), 1, (1, 2, 3), CaseIParams(P("3*z1+5*z2+z3+7", 3), 1), "I"),
        "e^((3*z1+5*z2+z3-9)/2)/5",
    )
    pair = PairExpParams(1, 1, (1, 3, 2), (2, 5, 1), 7, 5, P("(3*z2-z3)^3", 3), P("(3*z2-z3)^2", 3))
    yield (
        "e3-b",
        construct_t3((2j, 5, -3), 1, (-1j * PI, 1j * PI, 3j * PI), pair, "II-pair"),
        "1/(4*i)*e^((3*z2-z3)^3+z1+3*z2+2*z3+7)+1/(4*i)*e^((3*z2-z3)^2+2*z1+5*z2+z3+5)",
    )
    yield (
        "e4-a",
        construct_t4((2, 6, 4), 1, 2, (1j * PI, 3, -1j * PI), CaseIParams(P("7*z1-3*z2+5*z3+9", 3), -1), "I"),
        "e^((7*z1-3*z2+5*z3+18)/2)/2",
    )
    pair = PairExpParams(1, 1, (2, 3, 4), (3, 1, 5), 5, 7)
    yield (
        "e4-b",
        construct_t4((-12j, -9, 5), 1, 2, (-1j * PI, 1j * PI, 1j * PI), pair, "II-pair"),
        "1/(24*i)*e^(2*z1+3*z2+4*z3+5)+1/(24*i)*e^(3*z1+z2+5*z3+7)",
    )


def test_reference_constructions_reproduce_solutions(P, E):
    for name, con, text in _reference_constructions(P, E):
        assert ep_equal(con.f, E(text, 3)), name
        assert con.check().all_pass, (name, [it.label for it in con.check().failed()])
        assert verify(con.equation, con.f).verdict is Verdict.VERIFIED, name


def test_first_example_constraint_value(P):
    # 15/4 frozen from a 50-digit mpmath evaluation of both sides
    (k_lhs, k_rhs), (lhs, rhs) = _scalars(_e1a(P))
    assert k_lhs == pytest.approx(1) and k_rhs == pytest.approx(1)
    assert abs(lhs - 3.75) <= 1e-9 and abs(rhs - 3.75) <= 1e-9


def test_second_example_constraint_value():
    _, (lhs, rhs) = _scalars(_e1b())
    assert abs(lhs + 0.75) <= 1e-9 and abs(rhs + 0.75) <= 1e-9


def test_printed_e2a_shift_fails_its_condition(P, E):
    con = _e2a(P, E, "(1/12)*ln((27*sqrt(2)-1)/(3*sqrt(2)))")
    assert not con.check().all_pass
    assert verify(con.equation, con.f).verdict is Verdict.FAILED


def test_case_one_identities_vanish(P):
    con = construct_t3((5, -6, 4), 1, (1, 2, 3), CaseIParams(P("3*z1+5*z2+z3+7", 3), 1), "I")
    (item,) = con.check().items
    assert item.kind == "poly" and item.passed
    con = construct_t4((2, 6, 4), 1, 2, (1j * PI, 3, -1j * PI), CaseIParams(P("7*z1-3*z2+5*z3+9", 3), None), "I")
    (item,) = con.check().items
    assert item.passed
    # f -> -f leaves the equation unchanged, so both signs solve it
    assert all(ep_is_zero(r) for r in con.branches.values())


def test_case_one_identity_detects_wrong_slope(P):
    con = construct_t3((5, -6, 4), 1, (1, 2, 3), CaseIParams(P("2*z1+5*z2+z3+7", 3), 1), "I")
    assert not con.check().all_pass


def test_unit_k_pair_violates_norm_condition():
    params = SingleExpParams(1, 1, (1, 2, 3), 5)
    con = construct_t1((2, 1, 3, 5), 1, (2 * L(3), -L(4), 2j * PI / 3), params, "I")
    rep = con.check()
    assert not rep.all_pass
    assert any("K" in it.label for it in rep.failed())


def test_error_conditions(P):
    c = (1, 2, 3)
    with pytest.raises(ZeroBetaMu):
        construct_t3((5, -6, 4), 1, c, SingleExpParams(0.6, 0.8, (0, 1, 1)), "II-single")
    with pytest.raises(DegenerateDenominator):
        construct_t3((5, -6, 4), 1, c, SingleExpParams(1, 0, (1, 1, 1)), "II-single")
    with pytest.raises(CaseMismatch):
        construct_t3((5, -6, 4), 1, c, SingleExpParams(0.6, 0.8, (1, 1, 1)), "II-pair")
    with pytest.raises(CaseMismatch):
        construct_t4((2, 6, 4), 1, None, c, CaseIParams(P("z1", 3)), "I")
    with pytest.raises(CaseMismatch):
        construct("t7", (1, 1, 1, 1), 1, c, None, "I")
    with pytest.raises(CaseMismatch):
        construct_t1((1, 1, 1, 1), 1, c, SingleExpParams(1, 0, (1, 1, 1)), "III")


def test_periodic_part_must_be_shift_invariant(P):
    params = SingleExpParams(1, 0, (5, 7, 3), 1, P("z2^2", 3))
    con = construct_t1((3, 5, -3, 1), 1, (0.4 * L(4 / 15), L(15 / 4), L(4 / 15)), params, "I")
    assert not con.check().all_pass


def test_check_constraints_reports_errors():
    rep = check_constraints([Constraint("x", "scalar", 1.0, 1.0 + 1e-6), Constraint("y", "scalar", 2.0, 2.0)])
    assert not rep.all_pass
    assert [it.label for it in rep.failed()] == ["x"]
    assert rep.to_dict()["items"][0]["error"] == pytest.approx(1e-6)


def test_order_of_constructed_solutions(P, E):
    orders = {name: ep_order(con.f) for name, con, _ in _reference_constructions(P, E)}
    assert orders == {
        "e1-a": 2,
        "e1-b": 1,
        "e1-c": 1,
        "e2-a": 1,
        "e2-b": 1,
        "e3-a": 1,
        "e3-b": 3,
        "e4-a": 1,
        "e4-b": 1,
    }


def test_constructions_are_deterministic(P, E):
    first = [con.f for _, con, _ in _reference_constructions(P, E)]
    second = [con.f for _, con, _ in _reference_constructions(P, E)]
    assert first == second


def test_particular_aux_solves_difference_equation():
    a = (1.0, 2.0, 3.0, 1.0)
    c = (0.5, 0.25, -0.7)
    dim = 3
    e = Polynomial.linear((0, 1, 2), 0.3)
    forcing = ExpPoly.exp(e, 1.5)
    aux = particular_y1_aux(a, 1, c, forcing)
    h = aux.expr
    assert ep_is_zero(ep_partial(h, 1))
    assert ep_equal(ep_shift(h, c) * a[2] + h * a[1], forcing)
    # resonant exponent: a2 + a3*exp(w.c) == 0
    m = -a[1] / a[2]
    w2 = cmath.log(m) / c[1]
    forcing = ExpPoly.exp(Polynomial.linear((0, w2, 0)), 2.0)
    h = particular_y1_aux(a, 1, c, forcing).expr
    assert ep_equal(ep_shift(h, c) * a[2] + h * a[1], forcing)
    assert not h.terms[0].coeff.is_constant()
    assert dim == h.dim


CASES = [
    ("t1", "I"),
    ("t1", "I0"),
    ("t1", "II"),
    ("t1", "II-d0"),
    ("t1", "II-b0"),
    ("t1", "II-b0d0"),
    ("t2", "II-single"),
    ("t2", "II-pair"),
    ("t3", "I"),
    ("t3", "II-single"),
    ("t3", "II-pair"),
    ("t4", "I"),
    ("t4", "II-single"),
    ("t4", "II-pair"),
]


@pytest.mark.parametrize("theorem,case", CASES)
def test_random_parameter_sets_solve_equation(theorem, case):
    rng = np.random.default_rng(zlib.crc32(f"{theorem}/{case}".encode()))
    for _ in range(8):
        con, info = random_theorem_instance(rng, theorem, case)
        assert con.check().all_pass
        rep = verify(con.equation, con.f)
        assert rep.verdict is Verdict.VERIFIED, (theorem, case, rep.relative_residual)


def test_auxiliary_function_must_be_free_of_z_mu(E):
    bad = AuxiliaryFunction(E("e^(z1+z2)", 3), "Y1")
    params = SingleExpParams(1, 0, (1, 2, 3), 5, None, bad)
    con = construct_t1((2, 1, 3, 5), 1, (2 * L(3), -L(4), 2j * PI / 3), params, "I")
    failed = [it.label for it in con.check().failed()]
    assert any("independent of z1" in label for label in failed)
