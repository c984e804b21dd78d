"""The four Fermat-type partial differential-difference equations.

Each equation has the shape ``P1(f)**2 + P2(f)**2 = exp(g)``:

    E1: P1 = a1 d_mu f               P2 = a2 f + a3 f(z+c) + a4 d_mu^2 f
    E2: P1 = a1 Df + a2 d_mu f       P2 = a3 Df + a4 d_nu f        (Df = f(z+c) - f)
    E3: P1 = a1 f(z+c)               P2 = a2 d_mu f + a3 d_mu^2 f
    E4: P1 = a1 f(z+c)               P2 = a2 d_mu f + a3 d_mu d_nu f

``verify`` checks a candidate twice: symbolically (canonical residual is
empty) and numerically (pointwise evaluation at seeded random points).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import ConstantRHS, DimensionMismatch, IndexOrder, IndexOutOfRange, ZeroCoefficient, ZeroShift
from .expcore import (
    TAU,
    ExpPoly,
    Polynomial,
    ep_difference,
    ep_eval_many,
    ep_is_zero,
    ep_partial,
    ep_shift,
)
from .expcore.exppoly import OVERFLOW_EXPONENT


class EquationKind(str, enum.Enum):
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"
    E4 = "E4"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper()
        if key.isdigit():
            key = "E" + key
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown equation kind {value!r}; expected e1..e4") from None

    @property
    def needs_nu(self):
        return self in (EquationKind.E2, EquationKind.E4)


@dataclass(frozen=True)
class EquationSpec:
    kind: EquationKind
    a: tuple
    mu: int
    nu: int | None
    c: tuple
    g: Polynomial
    dim: int

    @property
    def a1(self):
        return self.a[0]

    def with_coefficient(self, i, value):
        """Copy with ``a_i`` (1-based) replaced; used for perturbation runs."""
        a = list(self.a)
        a[i - 1] = complex(value)
        return make_equation(self.kind, a, self.mu, self.c, self.g, nu=self.nu)


def make_equation(kind, a, mu, c, g, nu=None):
    kind = EquationKind.parse(kind)
    a = [complex(x) for x in a]
    if kind in (EquationKind.E3, EquationKind.E4) and len(a) == 3:
        a.append(1.0 + 0j)  # a4 does not enter E3/E4
    if len(a) != 4:
        raise ValueError(f"expected four coefficients a1..a4, got {len(a)}")
    for i, x in enumerate(a, start=1):
        if abs(x) <= TAU:
            raise ZeroCoefficient(f"a{i} must be nonzero")
    if kind is EquationKind.E2:
        s = a[0] ** 2 + a[2] ** 2
        if abs(s) <= TAU * max(1.0, abs(a[0]) ** 2 + abs(a[2]) ** 2):
            raise ZeroCoefficient("E2 requires a1^2 + a3^2 != 0")
    c = tuple(complex(x) for x in c)
    if not isinstance(g, Polynomial):
        raise TypeError("g must be a Polynomial")
    dim = g.dim
    if len(c) != dim:
        raise DimensionMismatch(f"shift has {len(c)} coordinates, g has dimension {dim}")
    if all(x == 0 for x in c):
        raise ZeroShift("shift c must be nonzero")
    if not isinstance(mu, int) or not 1 <= mu <= dim:
        raise IndexOutOfRange(f"mu={mu!r} outside 1..{dim}")
    if kind.needs_nu:
        if nu is None:
            raise IndexOrder(f"{kind.value} requires nu")
        if not isinstance(nu, int) or not 1 <= nu <= dim:
            raise IndexOutOfRange(f"nu={nu!r} outside 1..{dim}")
        if mu >= nu:
            raise IndexOrder(f"{kind.value} requires mu < nu, got mu={mu}, nu={nu}")
    else:
        nu = None
    if g.is_constant():
        raise ConstantRHS("g must be a non-constant polynomial")
    return EquationSpec(kind, tuple(a), mu, nu, c, g, dim)


def equation_pieces(spec, f):
    """Return ``(P1, P2)`` with LHS = P1**2 + P2**2."""
    if f.dim != spec.dim:
        raise DimensionMismatch(f"f has dimension {f.dim}, equation has {spec.dim}")
    a1, a2, a3, a4 = spec.a
    mu, nu, c = spec.mu, spec.nu, spec.c
    df = ep_partial(f, mu)
    kind = spec.kind
    if kind is EquationKind.E1:
        return df * a1, f * a2 + ep_shift(f, c) * a3 + ep_partial(df, mu) * a4
    if kind is EquationKind.E2:
        delta = ep_difference(f, c)
        return delta * a1 + df * a2, delta * a3 + ep_partial(f, nu) * a4
    second = ep_partial(df, mu) if kind is EquationKind.E3 else ep_partial(df, nu)
    return ep_shift(f, c) * a1, df * a2 + second * a3


def rhs(spec):
    return ExpPoly.exp(spec.g)


def residual(spec, f):
    """LHS(f) - exp(g) in canonical form."""
    p1, p2 = equation_pieces(spec, f)
    return p1 * p1 + p2 * p2 - rhs(spec)


@dataclass(frozen=True)
class SamplingConfig:
    sample_count: int = 100
    radius: float = 1.0
    seed: int = 20240001
    tol_rel: float = 1e-6

    def __post_init__(self):
        if int(self.sample_count) < 1:
            raise ValueError("sample_count must be >= 1")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if not self.tol_rel > 0:
            raise ValueError("tol_rel must be positive")


class Verdict(str, enum.Enum):
    VERIFIED = "Verified"
    SYMBOLIC_ONLY_FAILED = "SymbolicOnlyFailed"
    NUMERIC_ONLY_FAILED = "NumericOnlyFailed"
    FAILED = "Failed"


@dataclass(frozen=True)
class VerificationReport:
    symbolic_zero: bool
    max_abs_residual: float
    scale: float
    sample_count: int
    verdict: Verdict
    tol_rel: float
    seed: int
    resampled: int = 0
    residual_terms: int = 0
    residual_max_coeff: float = 0.0
    residual: ExpPoly | None = field(default=None, compare=False, repr=False)

    @property
    def numeric_pass(self):
        return self.max_abs_residual <= self.tol_rel * self.scale

    @property
    def relative_residual(self):
        return self.max_abs_residual / self.scale if self.scale else float("inf")

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "symbolic_zero": self.symbolic_zero,
            "max_abs_residual": self.max_abs_residual,
            "scale": self.scale,
            "relative_residual": self.relative_residual,
            "sample_count": self.sample_count,
            "resampled": self.resampled,
            "tol_rel": self.tol_rel,
            "seed": self.seed,
            "residual_terms": self.residual_terms,
            "residual_max_coeff": self.residual_max_coeff,
        }


def sample_polydisc(rng, count, dim, radius):
    """``count`` points, each coordinate uniform on the disc ``|w| <= radius``."""
    out = np.empty((count, dim), dtype=np.complex128)
    filled = np.zeros((count, dim), dtype=bool)
    while not filled.all():
        re = rng.uniform(-radius, radius, size=(count, dim))
        im = rng.uniform(-radius, radius, size=(count, dim))
        w = re + 1j * im
        ok = (np.abs(w) <= radius) & ~filled
        out[ok] = w[ok]
        filled |= ok
    return out


_MAX_ROUNDS = 50


def numeric_check(spec, f, cfg=SamplingConfig()):
    """Pointwise comparison of LHS and RHS.

    Returns ``(max_abs_residual, scale, accepted, resampled)``.  Points at
    which any exponent has real part above the overflow threshold are
    discarded and redrawn.
    """
    p1, p2 = equation_pieces(spec, f)
    r = rhs(spec)
    rng = np.random.default_rng(cfg.seed)
    need = int(cfg.sample_count)
    max_res, scale, accepted, resampled = 0.0, 1.0, 0, 0
    for _ in range(_MAX_ROUNDS):
        if accepted >= need:
            break
        pts = sample_polydisc(rng, need - accepted, spec.dim, cfg.radius)
        v1, m1 = ep_eval_many(p1, pts)
        v2, m2 = ep_eval_many(p2, pts)
        vr, mr = ep_eval_many(r, pts)
        # P1, P2 are squared below, so their exponents get half the headroom
        ok = (2 * np.maximum(m1, m2) <= OVERFLOW_EXPONENT) & (mr <= OVERFLOW_EXPONENT)
        with np.errstate(over="ignore", invalid="ignore"):
            s1, s2 = v1**2, v2**2
            lhs = s1 + s2
        # large coefficients can still overflow below the exponent threshold
        ok &= np.isfinite(s1) & np.isfinite(s2) & np.isfinite(lhs) & np.isfinite(vr)
        resampled += int((~ok).sum())
        if not ok.any():
            continue
        s1, s2, lhs, vr = s1[ok], s2[ok], lhs[ok], vr[ok]
        max_res = max(max_res, float(np.max(np.abs(lhs - vr))))
        scale = max(
            scale,
            float(np.max(np.abs(lhs))),
            float(np.max(np.abs(vr))),
            float(np.max(np.abs(s1))),
            float(np.max(np.abs(s2))),
        )
        accepted += int(ok.sum())
    if accepted == 0:
        return float("inf"), scale, 0, resampled
    return max_res, scale, accepted, resampled


def verify(spec, f, cfg=SamplingConfig()):
    res = residual(spec, f)
    symbolic_zero = ep_is_zero(res)
    max_res, scale, accepted, resampled = numeric_check(spec, f, cfg)
    numeric_ok = max_res <= cfg.tol_rel * scale
    if symbolic_zero and numeric_ok:
        verdict = Verdict.VERIFIED
    elif numeric_ok:
        verdict = Verdict.SYMBOLIC_ONLY_FAILED
    elif symbolic_zero:
        verdict = Verdict.NUMERIC_ONLY_FAILED
    else:
        verdict = Verdict.FAILED
    return VerificationReport(
        symbolic_zero=symbolic_zero,
        max_abs_residual=max_res,
        scale=scale,
        sample_count=accepted,
        verdict=verdict,
        tol_rel=cfg.tol_rel,
        seed=cfg.seed,
        resampled=resampled,
        residual_terms=len(res.terms),
        residual_max_coeff=res.max_coefficient(),
        residual=res,
    )
