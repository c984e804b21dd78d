import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat_pdde.errors import ExpressionSyntaxError, NotInClass
from fermat_pdde.expcore import ExpPoly, Polynomial
from fermat_pdde.parser import parse_constant, parse_expression, parse_polynomial, split_top_level
from fermat_pdde.printing import format_exppoly, format_poly
from fermat_pdde.testing import random_exppoly, random_polynomial


def test_single_exponential():
    f = parse_expression("e^((z1+2*z2+3*z3+5)/2)", 3)
    (t,) = f.terms
    assert t.coeff.constant_term == pytest.approx(math.exp(2.5))
    assert t.exponent == Polynomial.linear((0.5, 1, 1.5))


def test_periodic_exponent_example():
    f = parse_expression("(2/15)*e^(((z2+z3)^2+5*z1+7*z2+3*z3+1)/2)", 3)
    g = parse_expression("(2/15)*e^((z2^2+z3^2+2*z2*z3+5*z1+7*z2+3*z3+1)/2)", 3)
    assert f == g


def test_nested_exponential_rejected():
    with pytest.raises(NotInClass):
        parse_expression("e^(e^(z1))", 1)


def test_division_by_non_constant_rejected():
    with pytest.raises(NotInClass):
        parse_expression("1/z1", 1)


@pytest.mark.parametrize(
    "text, value",
    [
        ("2*ln(3)", 2 * math.log(3)),
        ("-pi*i/3", -1j * math.pi / 3),
        ("0.5+2i", 0.5 + 2j),
        ("1e-05i", 1e-5j),
        ("sqrt(-4)", 2j),
        ("2^3^2", 2**9),
        ("4/(3*i)", 4 / 3j),
        ("exp(i*pi)", -1),
    ],
)
def test_constants(text, value):
    assert parse_constant(text) == pytest.approx(value)


def test_implicit_product_after_number():
    assert parse_expression("3z1", 1) == parse_expression("3*z1", 1)
    assert parse_expression("2e^(z1)", 1) == parse_expression("2*e^(z1)", 1)


@pytest.mark.parametrize(
    "text, pos",
    [("z1 +", 4), ("(z1", 3), ("z1 ** 2", 4), ("foo", 0), ("z4", 0), ("1 $ 2", 2)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(text, 3)
    assert info.value.position == pos


def test_syntax_error_lists_expected_tokens():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression("(z1+z2", 2)
    assert "')'" in info.value.expected


def test_parse_polynomial_rejects_exponentials():
    with pytest.raises(NotInClass):
        parse_polynomial("e^(z1)", 1)


def test_split_top_level():
    assert split_top_level("1, f(a,b), 3") == ["1", "f(a,b)", "3"]


def test_print_formats():
    assert format_poly(Polynomial.zero(2)) == "0"
    assert format_exppoly(ExpPoly.zero(2)) == "0"
    assert format_poly(Polynomial(2, {(1, 2): -1j})) == "(-1.0i)*z1*z2^2"


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_print_parse_round_trip(seed):
    rng = np.random.default_rng(seed)
    f = random_exppoly(rng, 3)
    assert parse_expression(format_exppoly(f), 3) == f
    p = random_polynomial(rng, 2, 5, 4)
    assert parse_polynomial(format_poly(p), 2) == p


def test_constant_expression_evaluated_once():
    f = parse_expression("ln(4/15)*z1", 1)
    assert f.as_polynomial().terms[(1,)] == pytest.approx(cmath.log(4 / 15))
