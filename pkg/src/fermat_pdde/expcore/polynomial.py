"""Sparse multivariate polynomials over C.

A polynomial is a map from exponent tuples (one entry per variable) to
complex coefficients.  Values are immutable; every arithmetic operation
returns a freshly normalized polynomial.

Normalization drops a coefficient when it is negligible either against
the largest coefficient of the result or against the total magnitude of
the contributions that were summed into it (floating-point cancellation).
Both tests use the merge tolerance ``TAU``.
"""
from __future__ import annotations

import math
import numbers
from itertools import product
from math import comb
from types import MappingProxyType

from ..errors import DimensionMismatch, IndexOutOfRange, ResourceLimit

TAU = 1e-9
ABS_FLOOR = 1e-300
MAX_DEGREE = 64
MAX_TERMS = 10**6


def _is_scalar(x):
    return isinstance(x, numbers.Number) and not isinstance(x, bool)


def _check_finite(v):
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise ValueError(f"non-finite coefficient {v!r}")


def finish(acc, dim):
    """Turn an accumulator ``{mono: [sum, mass]}`` into a normalized term map."""
    if not acc:
        return {}
    if len(acc) > MAX_TERMS:
        raise ResourceLimit(f"polynomial exceeds {MAX_TERMS} terms")
    peak = max(abs(s) for s, _ in acc.values())
    cut = max(TAU * peak, ABS_FLOOR)
    out = {}
    for mono, (s, mass) in acc.items():
        a = abs(s)
        if a <= cut or a <= TAU * mass:
            continue
        if sum(mono) > MAX_DEGREE:
            raise ResourceLimit(f"degree {sum(mono)} exceeds cap {MAX_DEGREE}")
        _check_finite(s)
        out[mono] = complex(s)
    return out


def _add_into(acc, mono, value, mass):
    slot = acc.get(mono)
    if slot is None:
        acc[mono] = [value, mass]
    else:
        slot[0] += value
        slot[1] += mass


class Polynomial:
    """Immutable sparse polynomial in ``dim`` variables ``z1..zn``.

    Equality is tolerance-based (difference normalizes to zero), so
    instances are not hashable.
    """

    __slots__ = ("dim", "_terms", "_flat")

    def __init__(self, dim, terms=None):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        acc = {}
        for mono, value in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != dim:
                raise DimensionMismatch(f"monomial {mono} has length {len(mono)}, expected {dim}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            value = complex(value)
            _add_into(acc, mono, value, abs(value))
        self.dim = dim
        self._terms = finish(acc, dim)
        self._flat = None

    @classmethod
    def _from_acc(cls, dim, acc):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = finish(acc, dim)
        obj._flat = None
        return obj

    # constructors ---------------------------------------------------

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def constant(cls, value, dim):
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, j, dim):
        """The coordinate function ``z_j`` (1-based)."""
        _check_index(j, dim)
        mono = [0] * dim
        mono[j - 1] = 1
        return cls(dim, {tuple(mono): 1})

    @classmethod
    def linear(cls, coeffs, const=0):
        """``sum(coeffs[j] * z_{j+1}) + const``."""
        dim = len(coeffs)
        terms = {}
        for j, a in enumerate(coeffs):
            mono = [0] * dim
            mono[j] = 1
            terms[tuple(mono)] = a
        terms[(0,) * dim] = const
        return cls(dim, terms)

    # inspection -----------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self._terms:
            return -math.inf
        return max(sum(m) for m in self._terms)

    def degree_in(self, j):
        _check_index(j, self.dim)
        if not self._terms:
            return -math.inf
        return max(m[j - 1] for m in self._terms)

    def depends_on(self, j):
        _check_index(j, self.dim)
        return any(m[j - 1] for m in self._terms)

    def is_constant(self):
        zero = (0,) * self.dim
        return all(m == zero for m in self._terms)

    @property
    def constant_term(self):
        return self._terms.get((0,) * self.dim, 0j)

    def without_constant(self):
        zero = (0,) * self.dim
        if zero not in self._terms:
            return self
        return Polynomial._trusted(self.dim, {m: v for m, v in self._terms.items() if m != zero})

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), 0j)

    def norm_inf(self):
        return max((abs(v) for v in self._terms.values()), default=0.0)

    @classmethod
    def _trusted(cls, dim, terms):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = terms
        obj._flat = None
        return obj

    def flat(self):
        """Cached ``(exponents, coefficients)`` arrays for the eval kernels."""
        if self._flat is None:
            import numpy as np

            if self._terms:
                exps = np.array(list(self._terms.keys()), dtype=np.int64).reshape(-1, self.dim)
                coefs = np.array(list(self._terms.values()), dtype=np.complex128)
            else:
                exps = np.zeros((0, self.dim), dtype=np.int64)
                coefs = np.zeros(0, dtype=np.complex128)
            self._flat = (exps, coefs)
        return self._flat

    # arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")
            return other
        if _is_scalar(other):
            return Polynomial.constant(other, self.dim)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted(self.dim, {m: -v for m, v in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        if _is_scalar(other):
            return poly_scale(self, other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return poly_scale(self, 1 / complex(other))
        if isinstance(other, Polynomial) and other.is_constant() and not other.is_zero():
            return poly_scale(self, 1 / other.constant_term)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(1, self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if _is_scalar(other):
            other = Polynomial.constant(other, self.dim)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __call__(self, point):
        return poly_eval(self, point)

    def __repr__(self):
        from ..printing import format_poly

        return f"Polynomial({format_poly(self)!r}, dim={self.dim})"


def _check_index(j, dim):
    if not isinstance(j, int) or not 1 <= j <= dim:
        raise IndexOutOfRange(f"variable index {j!r} outside 1..{dim}")


def _check_dims(p, q):
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions {p.dim} and {q.dim} differ")


def _check_point(p, z):
    if len(z) != p.dim:
        raise DimensionMismatch(f"point has {len(z)} coordinates, expected {p.dim}")


def poly_add(p, q):
    _check_dims(p, q)
    acc = {}
    for src in (p._terms, q._terms):
        for m, v in src.items():
            _add_into(acc, m, v, abs(v))
    return Polynomial._from_acc(p.dim, acc)


def poly_scale(p, k):
    k = complex(k)
    if k == 0:
        return Polynomial.zero(p.dim)
    acc = {m: [v * k, abs(v * k)] for m, v in p._terms.items()}
    return Polynomial._from_acc(p.dim, acc)


def poly_mul(p, q):
    _check_dims(p, q)
    if not p._terms or not q._terms:
        return Polynomial.zero(p.dim)
    if len(p._terms) * len(q._terms) > MAX_TERMS:
        raise ResourceLimit("product term count exceeds cap")
    acc = {}
    qitems = list(q._terms.items())
    for m1, v1 in p._terms.items():
        for m2, v2 in qitems:
            v = v1 * v2
            _add_into(acc, tuple(a + b for a, b in zip(m1, m2)), v, abs(v))
    return Polynomial._from_acc(p.dim, acc)


def poly_eval(p, z):
    _check_point(p, z)
    total = 0j
    for mono, v in p._terms.items():
        term = v
        for x, e in zip(z, mono):
            if e:
                term *= x**e
        total += term
    return total


def poly_partial(p, j):
    _check_index(j, p.dim)
    i = j - 1
    acc = {}
    for m, v in p._terms.items():
        e = m[i]
        if e == 0:
            continue
        nm = m[:i] + (e - 1,) + m[i + 1 :]
        _add_into(acc, nm, v * e, abs(v) * e)
    return Polynomial._from_acc(p.dim, acc)


def poly_shift(p, c):
    """Return ``p(z + c)`` by binomial expansion."""
    _check_point(p, c)
    c = [complex(x) for x in c]
    acc = {}
    for m, v in p._terms.items():
        # per-variable expansion of (z_j + c_j)^e_j
        factors = []
        for cj, e in zip(c, m):
            if e == 0 or cj == 0:
                factors.append(((e, 1.0 + 0j),))
            else:
                factors.append(tuple((k, comb(e, k) * cj ** (e - k)) for k in range(e + 1)))
        for choice in product(*factors):
            val = v
            for _, f in choice:
                val *= f
            _add_into(acc, tuple(k for k, _ in choice), val, abs(val))
    return Polynomial._from_acc(p.dim, acc)


def poly_compose_linear(phi, t, const=0):
    """Evaluate the univariate coefficient list ``phi`` at ``t . z + const``.

    ``phi[k]`` is the coefficient of ``u**k``.
    """
    u = Polynomial.linear(t, const)
    result = Polynomial.zero(len(t))
    for a in reversed(list(phi)):
        result = result * u + a
    return result

