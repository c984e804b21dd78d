import cmath

import pytest

from fermat_pdde.errors import DimensionMismatch, IndexOutOfRange, ResourceLimit
from fermat_pdde.expcore import Polynomial, poly_add, poly_eval, poly_mul, poly_partial, poly_shift
from fermat_pdde.expcore.polynomial import poly_compose_linear


def test_add_cancels_to_lower_terms(P):
    assert poly_add(P("z1^2+2*z2"), P("-z1^2")) == P("2*z2")


def test_add_zero_is_identity(P):
    p = P("z1^2+2*z2+3*i")
    assert poly_add(p, Polynomial.zero(3)) == p


def test_add_builds_periodic_exponent(P):
    got = poly_add(P("(z2+z3)^2"), P("5*z1+7*z2+3*z3+1"))
    assert got == P("z2^2+2*z2*z3+z3^2+5*z1+7*z2+3*z3+1")
    assert got.terms[(0, 1, 1)] == 2


def test_mul_square_identity_annihilator(P):
    s = P("z2+z3")
    assert poly_mul(s, s) == P("z2^2+2*z2*z3+z3^2")
    assert poly_mul(s, Polynomial.constant(1, 3)) == s
    assert poly_mul(s, Polynomial.zero(3)).is_zero()


def test_mul_degree_adds(P):
    p, q = P("z1^2*z2+1"), P("z3^3-z1")
    assert poly_mul(p, q).degree == p.degree + q.degree


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        poly_add(Polynomial.variable(1, 2), Polynomial.variable(1, 3))
    with pytest.raises(DimensionMismatch):
        poly_mul(Polynomial.variable(1, 2), Polynomial.variable(1, 3))


def test_eval_examples(P):
    assert poly_eval(P("z1^2+2*z2", 2), (1, 2j)) == 1 + 4j
    assert poly_eval(Polynomial.zero(2), (3, 4)) == 0
    assert poly_eval(P("(z2+z3)^2"), (0, 1, -1)) == 0


def test_eval_wrong_length(P):
    with pytest.raises(DimensionMismatch):
        poly_eval(P("z1"), (1, 2))


def test_partial_examples(P):
    assert poly_partial(P("z1^2+2*z2"), 1) == P("2*z1")
    assert poly_partial(P("(z2+z3)^2"), 2) == P("2*z2+2*z3")
    assert poly_partial(Polynomial.constant(7, 3), 1).is_zero()


def test_partial_index_checked(P):
    with pytest.raises(IndexOutOfRange):
        poly_partial(P("z1"), 4)
    with pytest.raises(IndexOutOfRange):
        poly_partial(P("z1"), 0)


def test_shift_binomial(P):
    assert poly_shift(P("z1^2", 1), (1,)) == P("z1^2+2*z1+1", 1)


def test_shift_linear_adds_constant(P):
    beta = (2, -1j, 3)
    c = (0.5, 2, 1j)
    got = poly_shift(Polynomial.linear(beta), c)
    assert got == Polynomial.linear(beta, sum(b * x for b, x in zip(beta, c)))


def test_shift_periodic_unchanged(P):
    c = (0.4 * cmath.log(4 / 15), cmath.log(15 / 4), cmath.log(4 / 15))
    g = P("(z2+z3)^2")
    assert poly_shift(g, c) == g


def test_zero_polynomial_degree():
    z = Polynomial.zero(2)
    assert z.is_zero() and z.degree == float("-inf")


def test_normalization_drops_cancelled_noise():
    p = Polynomial(1, {(1,): 0.1 + 0.2}) - Polynomial(1, {(1,): 0.3})
    assert p.is_zero()


def test_degree_cap():
    x = Polynomial.variable(1, 1)
    with pytest.raises(ResourceLimit):
        x**65


def test_compose_linear():
    got = poly_compose_linear([0, 3, 1], (0, 1, -1))
    z2, z3 = Polynomial.variable(2, 3), Polynomial.variable(3, 3)
    assert got == (z2 - z3) ** 2 + (z2 - z3) * 3


def test_hash_disabled():
    with pytest.raises(TypeError):
        hash(Polynomial.variable(1, 1))
