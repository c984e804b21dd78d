"""Complete partial parameter sets by inverting the exponential relations.

Two unknown shapes occur.  A missing shift component enters only the
exponent, so it has a closed form on each logarithm branch.  A missing
weight (``beta_m``, ``b_m`` or ``d_m``) may also enter the right-hand side,
giving ``exp(L0 + s*x) = R(x)`` with ``R`` a polynomial; that case is
solved by Newton's method from a grid of starts.
"""
from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import NoRootFound, ZeroTarget, ZeroWeight
from .expcore import Polynomial, poly_partial
from .theorems import RELATIONS

TWO_PI_I = 2j * cmath.pi
DEDUP_RADIUS = 1e-8


@dataclass(frozen=True)
class LogConstraint:
    """``exp(sum_j weights[j] * c[j]) == target`` with ``c[m-1]`` unknown.

    ``knowns`` is the full shift vector; its entry at ``m`` is ignored.
    """

    weights: tuple
    target: complex
    knowns: tuple
    m: int
    branch: int = 0

    def __post_init__(self):
        if len(self.weights) != len(self.knowns):
            raise ValueError("weights and knowns differ in length")
        if not 1 <= self.m <= len(self.weights):
            raise IndexError(f"unknown index {self.m} outside 1..{len(self.weights)}")
        if abs(complex(self.weights[self.m - 1])) == 0:
            raise ZeroWeight(f"weight at unknown index {self.m} is zero")
        if abs(complex(self.target)) == 0:
            raise ZeroTarget("target of a log constraint must be nonzero")


def solve_shift_component(lc):
    m = lc.m - 1
    rest = sum(complex(w) * complex(x) for j, (w, x) in enumerate(zip(lc.weights, lc.knowns)) if j != m)
    return (cmath.log(complex(lc.target)) + TWO_PI_I * lc.branch - rest) / complex(lc.weights[m])


def branch_of(lc, value):
    """Branch index ``k`` for which ``value`` solves ``lc``."""
    m = lc.m - 1
    w = complex(lc.weights[m])
    base = solve_shift_component(LogConstraint(lc.weights, lc.target, lc.knowns, lc.m, 0))
    return int(round(((complex(value) - base) * w / TWO_PI_I).real))


def shift_constraint(theorem, family, a, c, w, m, mu, nu=None, K3=1, K4=0):
    """The :class:`LogConstraint` for ``c_m`` in a theorem relation."""
    scale, rhs_fn = RELATIONS[(theorem, family)]
    target = complex(rhs_fn(tuple(complex(x) for x in a), K3, K4, tuple(w), mu, nu))
    return LogConstraint(tuple(scale * complex(x) for x in w), target, tuple(complex(x) for x in c), m)


# exponent parameters -------------------------------------------------------


@dataclass(frozen=True)
class ExponentRelation:
    """``F(x) = exp(offset + slope*x) - R(x)`` with ``R`` univariate."""

    offset: complex
    slope: complex
    R: Polynomial

    def __post_init__(self):
        if self.R.dim != 1:
            raise ValueError("R must be a polynomial in one variable")
        object.__setattr__(self, "offset", complex(self.offset))
        object.__setattr__(self, "slope", complex(self.slope))

    def lhs(self, x):
        return cmath.exp(self.offset + self.slope * x)

    def rhs(self, x):
        return complex(self.R((x,)))

    def value(self, x):
        return self.lhs(x) - self.rhs(x)

    def derivative(self, x):
        return self.slope * self.lhs(x) - complex(poly_partial(self.R, 1)((x,)))


def exponent_relation(theorem, family, a, c, w, m, mu, nu=None, K3=1, K4=0):
    """Relation for the weight ``w[m-1]``; its entry in ``w`` is ignored."""
    scale, rhs_fn = RELATIONS[(theorem, family)]
    a = tuple(complex(x) for x in a)
    x = Polynomial.variable(1, 1)
    ws = [Polynomial.constant(complex(v), 1) for v in w]
    ws[m - 1] = x
    R = rhs_fn(a, K3, K4, tuple(ws), mu, nu)
    if not isinstance(R, Polynomial):
        R = Polynomial.constant(R, 1)
    offset = scale * sum(complex(v) * complex(cj) for j, (v, cj) in enumerate(zip(w, c)) if j != m - 1)
    return ExponentRelation(offset, scale * complex(c[m - 1]), R)


@dataclass(frozen=True)
class RootSearchConfig:
    re_range: tuple = (-10.0, 10.0)
    im_range: tuple = (-10.0, 10.0)
    grid: tuple = (21, 21)
    max_iter: int = 50
    tol: float = 1e-12

    def __post_init__(self):
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if min(self.grid) < 1:
            raise ValueError("grid must have at least one start per axis")

    def starts(self):
        re = np.linspace(*self.re_range, self.grid[0])
        im = np.linspace(*self.im_range, self.grid[1])
        return [complex(r, i) for r in re for i in im]


def _newton(rel, x, cfg):
    converged = False
    for _ in range(cfg.max_iter):
        try:
            fx = rel.value(x)
            dfx = rel.derivative(x)
        except OverflowError:
            return None
        if dfx == 0 or not cmath.isfinite(fx):
            return None
        step = fx / dfx
        x -= step
        if not cmath.isfinite(x):
            return None
        if abs(step) <= cfg.tol * max(1.0, abs(x)):
            converged = True
            break
    if not converged:
        return None
    try:
        lhs, rhs = rel.lhs(x), rel.rhs(x)
    except OverflowError:
        return None
    err = abs(lhs - rhs)
    # the second test rejects drift toward exp(L) -> 0 when R vanishes there
    if err <= cfg.tol * max(1.0, abs(rhs)) and err <= _REL_AGREE * max(abs(lhs), abs(rhs)):
        return x
    return None


_REL_AGREE = 1e-8


def solve_exponent_parameter(rel, cfg=RootSearchConfig()):
    """All grid-started Newton roots of ``rel``, deduplicated and sorted.

    An empty result is returned with a :class:`NoRootFound` warning.
    """
    if rel.slope == 0 and rel.R.degree <= 0:
        raise ValueError("the unknown does not enter the relation")
    roots = []
    for x0 in cfg.starts():
        r = _newton(rel, x0, cfg)
        if r is not None and all(abs(r - s) > DEDUP_RADIUS for s in roots):
            roots.append(r)
    roots.sort(key=lambda z: (z.real, z.imag))
    if not roots:
        warnings.warn("no root converged from the start grid", NoRootFound, stacklevel=2)
    return roots
