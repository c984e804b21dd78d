"""Exponential polynomials: finite sums of ``p(z) * exp(q(z))``.

Canonical form keeps exponents constant-free (the constant ``k`` of an
exponent is folded into the coefficient as ``e**k``) and pairwise distinct
up to the merge tolerance.  Two distinct constant-free exponents differ by
a non-constant polynomial, so by the Borel-type independence of
exponentials a canonical sum vanishes identically exactly when its term
list is empty.  ``ep_is_zero`` relies on that.
"""
from __future__ import annotations

import cmath
import warnings
from typing import NamedTuple

import numpy as np

from ..errors import (
    DimensionMismatch,
    ExponentOverflowWarning,
    NotIntegrableInClass,
    ResourceLimit,
    ZeroFunction,
)
from . import kernels
from .polynomial import (
    MAX_TERMS,
    TAU,
    Polynomial,
    _add_into,
    _check_index,
    _is_scalar,
    poly_mul,
    poly_partial,
    poly_shift,
)

OVERFLOW_EXPONENT = 700.0


class ExpTerm(NamedTuple):
    coeff: Polynomial
    exponent: Polynomial


def _exponents_close(q1, q2, n1, n2):
    tol = TAU * max(1.0, n1, n2)
    t1, t2 = q1.terms, q2.terms
    for m, v in t1.items():
        if abs(v - t2.get(m, 0j)) > tol:
            return False
    for m, v in t2.items():
        if m not in t1 and abs(v) > tol:
            return False
    return True


def ep_normalize(raw, dim=None):
    """Canonicalize an iterable of ``(coeff, exponent)`` polynomial pairs."""
    raw = list(raw)
    if dim is None:
        if not raw:
            raise ValueError("dimension required for an empty term list")
        dim = raw[0][0].dim
    groups = []  # [exponent, norm, accumulator]
    for coeff, expo in raw:
        if coeff.dim != dim or expo.dim != dim:
            raise DimensionMismatch("all terms must share the ambient dimension")
        if coeff.is_zero():
            continue
        k = expo.constant_term
        q = expo.without_constant()
        factor = cmath.exp(k) if k else 1.0
        qn = q.norm_inf()
        for group in groups:
            if _exponents_close(q, group[0], qn, group[1]):
                acc = group[2]
                break
        else:
            acc = {}
            groups.append([q, qn, acc])
        for m, v in coeff.terms.items():
            val = v * factor
            _add_into(acc, m, val, abs(val))
    terms = []
    for q, _, acc in groups:
        c = Polynomial._from_acc(dim, acc)
        if not c.is_zero():
            terms.append(ExpTerm(c, q))
    return ExpPoly._trusted(dim, tuple(terms))


class ExpPoly:
    """Canonical exponential polynomial ``sum_i p_i(z) exp(q_i(z))``.

    Build instances with :meth:`exp`, :meth:`from_polynomial`,
    :meth:`constant` or arithmetic; the raw constructor normalizes.
    """

    __slots__ = ("dim", "terms", "_flat")

    def __init__(self, dim, terms=()):
        canon = ep_normalize(terms, dim)
        self.dim = dim
        self.terms = canon.terms
        self._flat = None

    @classmethod
    def _trusted(cls, dim, terms):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        obj._flat = None
        return obj

    @classmethod
    def zero(cls, dim):
        return cls._trusted(dim, ())

    @classmethod
    def constant(cls, value, dim):
        return cls.from_polynomial(Polynomial.constant(value, dim))

    @classmethod
    def from_polynomial(cls, p):
        return ep_normalize([(p, Polynomial.zero(p.dim))], p.dim)

    @classmethod
    def exp(cls, exponent, coeff=1):
        """``coeff * exp(exponent)``; ``coeff`` may be a scalar or polynomial."""
        if not isinstance(coeff, Polynomial):
            coeff = Polynomial.constant(coeff, exponent.dim)
        return ep_normalize([(coeff, exponent)], exponent.dim)

    # inspection -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_polynomial(self):
        return all(t.exponent.is_zero() for t in self.terms)

    def as_polynomial(self):
        """The polynomial this represents; ``None`` if any exponential is present."""
        if not self.is_polynomial():
            return None
        if not self.terms:
            return Polynomial.zero(self.dim)
        return self.terms[0].coeff

    def depends_on(self, j):
        return any(t.coeff.depends_on(j) or t.exponent.depends_on(j) for t in self.terms)

    def max_coefficient(self):
        return max((t.coeff.norm_inf() for t in self.terms), default=0.0)

    def flat(self):
        if self._flat is None:
            n = self.dim
            cex, cco, eex, eco = [], [], [], []
            coff, eoff = [0], [0]
            for t in self.terms:
                a, b = t.coeff.flat()
                cex.append(a)
                cco.append(b)
                coff.append(coff[-1] + len(b))
                a, b = t.exponent.flat()
                eex.append(a)
                eco.append(b)
                eoff.append(eoff[-1] + len(b))
            empty_e = np.zeros((0, n), dtype=np.int64)
            empty_c = np.zeros(0, dtype=np.complex128)
            self._flat = (
                np.concatenate(cex) if cex else empty_e,
                np.concatenate(cco) if cco else empty_c,
                np.array(coff, dtype=np.int64),
                np.concatenate(eex) if eex else empty_e,
                np.concatenate(eco) if eco else empty_c,
                np.array(eoff, dtype=np.int64),
            )
        return self._flat

    # arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExpPoly):
            if other.dim != self.dim:
                raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")
            return other
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")
            return ExpPoly.from_polynomial(other)
        if _is_scalar(other):
            return ExpPoly.constant(other, self.dim)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ep_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly._trusted(self.dim, tuple(ExpTerm(-t.coeff, t.exponent) for t in self.terms))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ep_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ep_add(other, -self)

    def __mul__(self, other):
        if _is_scalar(other):
            return ep_scale(self, other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ep_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ep_scale(self, 1 / complex(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be non-negative integers")
        result = ExpPoly.constant(1, self.dim)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ep_equal(self, other)

    __hash__ = None

    def __call__(self, point):
        return ep_eval(self, point)

    def __repr__(self):
        from ..printing import format_exppoly

        return f"ExpPoly({format_exppoly(self)!r}, dim={self.dim})"


def _check_dims(f, g):
    if f.dim != g.dim:
        raise DimensionMismatch(f"dimensions {f.dim} and {g.dim} differ")


def ep_add(f, g):
    _check_dims(f, g)
    return ep_normalize(list(f.terms) + list(g.terms), f.dim)


def ep_scale(f, k):
    k = complex(k)
    return ep_normalize([(t.coeff * k, t.exponent) for t in f.terms], f.dim)


def ep_mul(f, g):
    _check_dims(f, g)
    if len(f.terms) * len(g.terms) > MAX_TERMS:
        raise ResourceLimit("product term count exceeds cap")
    raw = [
        (poly_mul(s.coeff, t.coeff), s.exponent + t.exponent) for s in f.terms for t in g.terms
    ]
    return ep_normalize(raw, f.dim)


def ep_equal(f, g):
    return ep_is_zero(f - g)


def ep_partial(f, j):
    """Partial derivative in ``z_j``: ``(p e^q)' = (p' + p q') e^q``."""
    _check_index(j, f.dim)
    raw = []
    for t in f.terms:
        dq = poly_partial(t.exponent, j)
        raw.append((poly_partial(t.coeff, j) + t.coeff * dq, t.exponent))
    return ep_normalize(raw, f.dim)


def ep_shift(f, c):
    """``f(z + c)``."""
    if len(c) != f.dim:
        raise DimensionMismatch(f"shift has {len(c)} coordinates, expected {f.dim}")
    raw = [(poly_shift(t.coeff, c), poly_shift(t.exponent, c)) for t in f.terms]
    return ep_normalize(raw, f.dim)


def ep_difference(f, c):
    return ep_add(ep_shift(f, c), ep_scale(f, -1))


def ep_eval_many(f, points):
    """Evaluate at an ``(P, n)`` array of points.

    Returns ``(values, max_real_exponent)``, the second being the largest
    real part of any exponent at each point (``-inf`` for the zero function).
    """
    pts = np.asarray(points, dtype=np.complex128)
    if pts.ndim != 2 or pts.shape[1] != f.dim:
        raise DimensionMismatch(f"points must have shape (P, {f.dim}), got {pts.shape}")
    return kernels.exppoly_eval_batch(*f.flat(), pts)


def ep_eval(f, z):
    if len(z) != f.dim:
        raise DimensionMismatch(f"point has {len(z)} coordinates, expected {f.dim}")
    values, maxre = ep_eval_many(f, np.asarray([z], dtype=np.complex128))
    if maxre[0] > OVERFLOW_EXPONENT:
        warnings.warn(
            f"exponent real part {maxre[0]:.1f} exceeds {OVERFLOW_EXPONENT}",
            ExponentOverflowWarning,
            stacklevel=2,
        )
    return complex(values[0])


def ep_is_zero(f):
    return not f.terms


def ep_order(f):
    """Growth order: the largest exponent degree (0 for a polynomial)."""
    if not f.terms:
        raise ZeroFunction("order of the zero function is undefined")
    return max(max(t.exponent.degree, 0) for t in f.terms)


def _integrate_poly(p, j):
    i = j - 1
    acc = {}
    for m, v in p.terms.items():
        e = m[i] + 1
        _add_into(acc, m[:i] + (e,) + m[i + 1 :], v / e, abs(v) / e)
    return Polynomial._from_acc(p.dim, acc)


def ep_antiderivative(f, j):
    """Antiderivative in ``z_j`` with zero integration constant.

    Each exponent must be affine in ``z_j`` with a constant slope lam.  For
    lam != 0 the coefficient integrates by the finite series
    ``sum_k (-1)**k p^(k) / lam**(k+1)``; for lam == 0 the coefficient is
    integrated as a polynomial.
    """
    _check_index(j, f.dim)
    raw = []
    for t in f.terms:
        if t.exponent.degree_in(j) >= 2:
            raise NotIntegrableInClass(f"exponent has degree >= 2 in z{j}")
        slope = poly_partial(t.exponent, j)
        if not slope.is_constant():
            raise NotIntegrableInClass(f"exponent slope in z{j} is not constant")
        lam = slope.constant_term
        if lam == 0:
            raw.append((_integrate_poly(t.coeff, j), t.exponent))
            continue
        total = Polynomial.zero(f.dim)
        deriv = t.coeff
        k = 0
        while not deriv.is_zero():
            total = total + deriv * ((-1) ** k / lam ** (k + 1))
            deriv = poly_partial(deriv, j)
            k += 1
        raw.append((total, t.exponent))
    return ep_normalize(raw, f.dim)


__all__ = [
    "ExpTerm",
    "ExpPoly",
    "ep_normalize",
    "ep_add",
    "ep_mul",
    "ep_scale",
    "ep_equal",
    "ep_partial",
    "ep_shift",
    "ep_difference",
    "ep_eval",
    "ep_eval_many",
    "ep_is_zero",
    "ep_order",
    "ep_antiderivative",
]
