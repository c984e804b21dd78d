"""The compiled and numpy kernels must agree; skipped when the extension is absent."""
import numpy as np
import pytest

from fermat_pdde.expcore import kernels
from fermat_pdde.expcore import ExpPoly
from fermat_pdde.testing import random_exppoly, random_point, random_polynomial

py = kernels.get_backend("python")
try:
    cy = kernels.get_backend("cython")
except ImportError:
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@pytest.mark.parametrize("seed", range(25))
def test_exppoly_backends_agree(seed):
    rng = np.random.default_rng(seed)
    f = random_exppoly(rng, 3, max_terms=5)
    pts = np.array([random_point(rng, 3, 1.5) for _ in range(40)])
    v1, m1 = py.exppoly_eval_batch(*f.flat(), pts)
    v2, m2 = cy.exppoly_eval_batch(*f.flat(), pts)
    np.testing.assert_allclose(v1, v2, rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(m1, m2, rtol=1e-12, atol=1e-12)


@needs_ext
def test_poly_backends_agree(rng):
    for _ in range(20):
        p = random_polynomial(rng, 4, 6, 5)
        pts = np.array([random_point(rng, 4) for _ in range(30)])
        exps, coefs = p.flat()
        np.testing.assert_allclose(py.poly_eval_batch(exps, coefs, pts), cy.poly_eval_batch(exps, coefs, pts), rtol=1e-12, atol=1e-12)


def test_zero_function_evaluates_to_zero(rng):
    pts = np.array([random_point(rng, 2) for _ in range(5)])
    for mod in filter(None, (py, cy)):
        vals, maxre = mod.exppoly_eval_batch(*ExpPoly.zero(2).flat(), pts)
        assert np.all(vals == 0)
        assert np.all(np.isneginf(maxre))
