import cmath
import math

import numpy as np
import pytest

from fermat_pdde.errors import ConstantRHS, DimensionMismatch, IndexOrder, IndexOutOfRange, ZeroCoefficient, ZeroShift
from fermat_pdde.expcore import ExpPoly, ep_is_zero
from fermat_pdde.pdde import SamplingConfig, Verdict, make_equation, residual, sample_polydisc, verify
from fermat_pdde.testing import random_exppoly

LN = cmath.log
PI = math.pi


@pytest.fixture
def e1b(P):
    return make_equation("e1", (2, 1, 3, 5), 1, (2 * LN(3), -LN(4), 2j * PI / 3), P("z1+2*z2+3*z3+5"))


@pytest.fixture
def e3a(P):
    return make_equation("e3", (5, -6, 4), 1, (1, 2, 3), P("3*z1+5*z2+z3+7"))


def test_validation_errors(P):
    g = P("z1+z2", 2)
    with pytest.raises(ZeroCoefficient):
        make_equation("e2", (1, 1, 1j, 1), 1, (1, 0), g, nu=2)
    with pytest.raises(ZeroCoefficient):
        make_equation("e1", (1, 0, 1, 1), 1, (1, 0), g)
    with pytest.raises(IndexOrder):
        make_equation("e4", (1, 1, 1), 2, (1, 0), g, nu=1)
    with pytest.raises(IndexOrder):
        make_equation("e2", (1, 1, 1, 1), 1, (1, 0), g)
    with pytest.raises(ZeroShift):
        make_equation("e1", (1, 1, 1, 1), 1, (0, 0), g)
    with pytest.raises(ConstantRHS):
        make_equation("e1", (1, 1, 1, 1), 1, (1, 0), P("3", 2))
    with pytest.raises(IndexOutOfRange):
        make_equation("e1", (1, 1, 1, 1), 3, (1, 0), g)
    with pytest.raises(DimensionMismatch):
        make_equation("e1", (1, 1, 1, 1), 1, (1, 0, 0), g)


def test_valid_equation(e1b):
    assert e1b.kind.value == "E1" and e1b.nu is None and e1b.dim == 3


def test_e1_residual_zero(e1b, E):
    assert ep_is_zero(residual(e1b, E("e^((z1+2*z2+3*z3+5)/2)")))


def test_e3_residual_zero(e3a, E):
    assert ep_is_zero(residual(e3a, E("e^((3*z1+5*z2+z3-9)/2)/5")))


def test_e3_perturbed_residual(e3a, E):
    # P2 = (a3 - 4) * (9/4) * f vanishes at a3 = 4, so the residual is
    # (delta * 9/4)^2 / 25 * e^-9 * e^(3z1+5z2+z3), quadratic in delta
    f = E("e^((3*z1+5*z2+z3-9)/2)/5")
    spec = e3a.with_coefficient(3, 5)
    res = residual(spec, f)
    assert len(res.terms) == 1
    assert res.terms[0].coeff.constant_term == pytest.approx(2.499048532755261e-05, rel=1e-9)
    assert res.terms[0].exponent == ExpPoly.exp(spec.g).terms[0].exponent


def test_e3_small_perturbation_below_resolution(e3a, E):
    # delta = 1e-3 leaves a residual 2.3e-14 relative to e^g: below the
    # cancellation tolerance, so the canonical residual is empty
    spec = e3a.with_coefficient(3, 4 + 1e-3)
    rep = verify(spec, E("e^((3*z1+5*z2+z3-9)/2)/5"))
    assert rep.symbolic_zero
    assert rep.relative_residual < 1e-12


def test_verify_reference_solution(e1b, E):
    rep = verify(e1b, E("e^((z1+2*z2+3*z3+5)/2)"))
    assert rep.verdict is Verdict.VERIFIED
    assert rep.symbolic_zero and rep.numeric_pass
    assert rep.sample_count == 100


def test_zero_candidate_fails(e1b):
    rep = verify(e1b, ExpPoly.zero(3))
    assert rep.verdict is Verdict.FAILED
    assert rep.residual_terms == 1


def test_verdict_independent_of_seed(e1b, E):
    f = E("e^((z1+2*z2+3*z3+5)/2)")
    for seed in (1, 2, 3):
        assert verify(e1b, f, SamplingConfig(seed=seed)).verdict is Verdict.VERIFIED


def test_report_deterministic(e3a, E):
    f = E("e^((3*z1+5*z2+z3-9)/2)/5+z1")
    assert verify(e3a, f).to_dict() == verify(e3a, f).to_dict()


def test_dimension_mismatch(e1b, E):
    with pytest.raises(DimensionMismatch):
        residual(e1b, E("z1", 2))


def test_overflow_points_resampled(P, E):
    spec = make_equation("e3", (1, 1, 1), 1, (1, 0), P("z1+z2", 2))
    rep = verify(spec, E("e^(600*z1)", 2), SamplingConfig(radius=2.0))
    assert rep.resampled > 0
    assert rep.sample_count == 100
    assert rep.verdict is Verdict.FAILED


def test_sample_polydisc_in_disc(rng):
    pts = sample_polydisc(rng, 500, 3, 0.5)
    assert pts.shape == (500, 3)
    assert np.all(np.abs(pts) <= 0.5)


def test_e2_case_one_instance(P, E):
    # h depends on z1, z2 only through 12*z1 + 6*z2 (proportional to a1*a4*z1 + a2*a3*z2)
    c1 = cmath.log((21 * math.sqrt(2) - 1) / (3 * math.sqrt(2))) / 12
    spec = make_equation("e2", (3, 2, 3, 4), 1, (c1, 1j * PI / 12, 1j * PI / 2), P("24*z1+12*z2+2*z3+18"), nu=2)
    assert ep_is_zero(residual(spec, E("e^(12*z1+6*z2+z3+9)")))


def test_symbolic_and_numeric_agree_on_random_pairs(P):
    rng = np.random.default_rng(7)
    spec = make_equation("e1", (1, 2, 3, 4), 1, (0.3, 0.1j, -0.2), P("z1+z2"))
    for _ in range(30):
        rep = verify(spec, random_exppoly(rng, 3), SamplingConfig(sample_count=30))
        if rep.symbolic_zero:
            assert rep.numeric_pass
        if not rep.numeric_pass:
            assert not rep.symbolic_zero
