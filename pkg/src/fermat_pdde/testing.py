"""Seeded random generators for property tests and benchmarks.

Every function takes an explicit ``numpy.random.Generator``; nothing reads
global random state.
"""
from __future__ import annotations

import cmath

import numpy as np

from .expcore import ExpPoly, Polynomial, build_periodic_polynomial
from .theorems import (
    RELATIONS,
    CaseIParams,
    PairExpParams,
    SingleExpParams,
    construct,
    particular_y1_aux,
)


def random_complex(rng, radius=1.0):
    """Uniform on the disc ``|w| <= radius``."""
    r = radius * np.sqrt(rng.uniform())
    return complex(r * cmath.exp(2j * np.pi * rng.uniform()))


def random_nonzero(rng, lo=0.3, hi=2.0):
    r = rng.uniform(lo, hi)
    return complex(r * cmath.exp(2j * np.pi * rng.uniform()))


def random_point(rng, dim, radius=1.0):
    return tuple(random_complex(rng, radius) for _ in range(dim))


def random_polynomial(rng, dim, max_terms=4, max_degree=3, radius=1.0):
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        deg = int(rng.integers(0, max_degree + 1))
        mono = [0] * dim
        for _ in range(deg):
            mono[int(rng.integers(0, dim))] += 1
        terms[tuple(mono)] = random_complex(rng, radius)
    return Polynomial(dim, terms)


def random_exppoly(rng, dim, max_terms=4, max_exp_degree=2, coeff_terms=3, coeff_degree=2):
    """Random ``sum p_i exp(q_i)`` with small coefficients and exponents."""
    raw = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        p = random_polynomial(rng, dim, coeff_terms, coeff_degree)
        q = random_polynomial(rng, dim, 3, int(rng.integers(0, max_exp_degree + 1)), radius=0.8)
        raw.append((p, q))
    return ExpPoly(dim, raw)


# theorem parameter sets ------------------------------------------------------


def _relation_rhs(theorem, family, a, w, mu, nu, K3, K4):
    _, fn = RELATIONS[(theorem, family)]
    return complex(fn(a, K3, K4, tuple(w), mu, nu))


def _fit_weight(theorem, family, a, c, w, j, mu, nu, K3, K4, branch=0):
    """Choose ``w[j-1]`` (not at mu/nu) so the relation holds exactly."""
    scale, _ = RELATIONS[(theorem, family)]
    R = _relation_rhs(theorem, family, a, w, mu, nu, K3, K4)
    if abs(R) < 1e-3:
        return None
    rest = sum(scale * w[k] * c[k] for k in range(len(w)) if k != j - 1)
    w = list(w)
    w[j - 1] = (cmath.log(R) + 2j * cmath.pi * branch - rest) / (scale * c[j - 1])
    if abs(w[j - 1]) > 8:
        return None
    return tuple(w)


def _periodic_part(rng, c, forbidden, degree):
    """``Phi(t . z)`` with ``t . c = 0`` and ``t`` zero on ``forbidden``."""
    free = [j for j in range(len(c)) if j + 1 not in forbidden]
    if len(free) < 2:
        return None
    j1, j2 = (int(x) for x in rng.choice(free, size=2, replace=False))
    t = [0j] * len(c)
    t[j1], t[j2] = c[j2], -c[j1]
    norm = max(abs(t[j1]), abs(t[j2]))
    if norm < 1e-3:
        return None
    t = [x / norm for x in t]
    phi = [0] + [random_complex(rng, 0.3) for _ in range(degree)]
    return build_periodic_polynomial(c, [(t, phi)], dim=len(c))


def random_theorem_instance(rng, theorem, case, dim=4, periodic=True):
    """A random parameter set satisfying every side condition.

    Returns ``(construction, info)`` where ``info`` records ``a``, ``c``,
    ``mu``, ``nu``, ``K3``, ``K4`` and the fitted weight vectors.  The
    construction is independent of the solver module: one free weight per
    relation is fixed by inverting the exponential in closed form.
    """
    for _ in range(200):
        out = _try_instance(rng, theorem, case, dim, periodic)
        if out is not None:
            return out
    raise RuntimeError(f"could not draw a valid instance for {theorem} {case}")


def _try_instance(rng, theorem, case, dim, periodic):
    needs_nu = theorem in ("t2", "t4")
    mu = 1
    nu = 2 if needs_nu else None
    forbidden = [mu] if nu is None else [mu, nu]
    j = dim  # free index, never mu or nu
    a = tuple(random_nonzero(rng) for _ in range(4))
    if theorem == "t2" and abs(a[0] ** 2 + a[2] ** 2) < 0.1:
        return None
    c = tuple(random_complex(rng, 1.0) for _ in range(dim))
    if abs(c[j - 1]) < 0.3:
        return None
    info = {"a": a, "c": c, "mu": mu, "nu": nu, "K3": 1, "K4": 0}

    if theorem == "t2" and case == "I":
        raise ValueError("case I of family t2 has no generator; h3 is implicit")
    if theorem in ("t3", "t4") and case == "I":
        a1, a2, a3, _ = a
        lin = [random_complex(rng) for _ in range(dim)]
        lin[mu - 1] = -2 * a2 / a3 if theorem == "t3" else random_nonzero(rng)
        if theorem == "t4":
            lin[nu - 1] = -2 * a2 / a3
        extra = Polynomial.zero(dim)
        if periodic:
            extra = random_polynomial(rng, dim - len(forbidden), 2, 2, radius=0.3)
            extra = _embed(extra, dim, forbidden)
        g = Polynomial.linear(lin, random_complex(rng)) + extra
        con = construct(theorem, a, mu, c, CaseIParams(g, None), case, nu=nu)
        info["g"] = g
        return con, info

    if case in ("I", "I0", "II-single"):
        K3 = random_nonzero(rng, 0.3, 1.5)
        K4 = cmath.sqrt(1 - K3 * K3)
        if theorem != "t1" and min(abs(K3), abs(K4)) < 0.2:
            return None
        if theorem == "t2" and abs(a[2] * K3 - a[0] * K4) < 0.1:
            return None
        w = [random_complex(rng, 1.5) for _ in range(dim)]
        if case == "I0":
            w[mu - 1] = 0j
        elif abs(w[mu - 1]) < 0.2:
            return None
        family = "beta"
        w = _fit_weight(theorem, family, a, c, w, j, mu, nu, K3, K4, int(rng.integers(-1, 2)))
        if w is None:
            return None
        g1 = _periodic_part(rng, c, forbidden, 2) if periodic else None
        aux = None
        beta_const = random_complex(rng)
        if case == "I0":
            g_half = (Polynomial.linear(w, beta_const) + (g1 if g1 is not None else Polynomial.zero(dim))) * 0.5
            forcing = ExpPoly.exp(g_half, K4 + a[1] * c[mu - 1] * K3 / a[0])
            aux = particular_y1_aux(a, mu, c, forcing)
        params = SingleExpParams(K3, K4, w, beta_const, g1, aux)
        info.update(K3=K3, K4=K4, beta=w)
    else:
        zb = case in ("II-b0", "II-b0d0")
        zd = case in ("II-d0", "II-b0d0")
        K1 = random_nonzero(rng, 0.5, 1.5)
        K2 = 1 / K1
        b = [random_complex(rng, 1.5) for _ in range(dim)]
        d = [random_complex(rng, 1.5) for _ in range(dim)]
        if zb:
            b[mu - 1] = 0j
        if zd:
            d[mu - 1] = 0j
        if (not zb and abs(b[mu - 1]) < 0.2) or (not zd and abs(d[mu - 1]) < 0.2):
            return None
        b = _fit_weight(theorem, "b", a, c, b, j, mu, nu, 1, 0, int(rng.integers(-1, 2)))
        d = _fit_weight(theorem, "d", a, c, d, j, mu, nu, 1, 0, int(rng.integers(-1, 2)))
        if b is None or d is None:
            return None
        if max(abs(x - y) for x, y in zip(b, d)) < 0.1:
            return None
        xi1 = _periodic_part(rng, c, forbidden, 2) if periodic else None
        xi2 = _periodic_part(rng, c, forbidden, 1) if periodic else None
        A, B = random_complex(rng), random_complex(rng)
        aux = None
        if zb or zd:
            forcing = ExpPoly.zero(dim)
            zero = Polynomial.zero(dim)
            if zd:
                gamma2 = Polynomial.linear(d, B) + (xi2 if xi2 is not None else zero)
                forcing = forcing + ExpPoly.exp(gamma2, (K2 / 2) * (a[1] * c[mu - 1] / a[0] + 1j))
            if zb:
                gamma1 = Polynomial.linear(b, A) + (xi1 if xi1 is not None else zero)
                forcing = forcing + ExpPoly.exp(gamma1, (K1 / 2) * (a[1] * c[mu - 1] / a[0] - 1j))
            aux = particular_y1_aux(a, mu, c, forcing)
        params = PairExpParams(K1, K2, b, d, A, B, xi1, xi2, aux)
        info.update(b=b, d=d)
    try:
        con = construct(theorem, a, mu, c, params, case, nu=nu)
    except ZeroDivisionError:
        return None
    return con, info


def _embed(p, dim, forbidden):
    """Re-index a polynomial in the non-forbidden variables into ``dim``."""
    keep = [j for j in range(1, dim + 1) if j not in forbidden]
    terms = {}
    for mono, v in p.terms.items():
        full = [0] * dim
        for e, j in zip(mono, keep):
            full[j - 1] = e
        terms[tuple(full)] = v
    return Polynomial(dim, terms)


__all__ = [
    "random_complex",
    "random_exppoly",
    "random_nonzero",
    "random_point",
    "random_polynomial",
    "random_theorem_instance",
]
