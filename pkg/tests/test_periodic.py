import cmath

import pytest

from fermat_pdde.errors import NotInKernel
from fermat_pdde.expcore import Polynomial, build_periodic_polynomial, is_periodic

C_REF = (0.4 * cmath.log(4 / 15), cmath.log(15 / 4), cmath.log(4 / 15))


def test_is_periodic_examples(P):
    assert is_periodic(P("(z2+z3)^2"), C_REF)
    assert not is_periodic(P("z1^2"), (1, 0, 0))
    assert is_periodic(Polynomial.constant(5, 3), (1, 2, 3))


def test_build_kernel_direction(P):
    got = build_periodic_polynomial((7, 2j, 2j), [((0, 1, -1), [0, 0, 1])])
    assert got == P("(z2-z3)^2")
    assert is_periodic(got, (7, 2j, 2j))


def test_build_reference_direction(P):
    got = build_periodic_polynomial(C_REF, [((0, 1, 1), [0, 0, 1])])
    assert got == P("(z2+z3)^2")


def test_build_empty_is_zero():
    assert build_periodic_polynomial((1, 2), []).is_zero()


def test_build_rejects_non_kernel_direction():
    with pytest.raises(NotInKernel):
        build_periodic_polynomial((1, 1, 0), [((1, 1, 0), [0, 1])])


def test_build_sums_several_directions(P):
    c = (1, 1, 1)
    got = build_periodic_polynomial(c, [((1, -1, 0), [0, 0, 1]), ((0, 1, -1), [0, 2])])
    assert got == P("(z1-z2)^2+2*(z2-z3)")
    assert is_periodic(got, c)
