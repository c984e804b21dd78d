"""Solution families of the four Fermat-type PDDEs and their side constraints.

Each ``construct_tN`` assembles a candidate ``f`` and the right-hand
exponent ``g`` from a parameter bundle and returns the list of identities
the parameters must satisfy.  Nothing is solved here: auxiliary entire
functions are inputs, and their functional equations are emitted as
constraints for :func:`check_constraints`.

Coefficients ``a`` are 1-based in the formulas (``a1..a4``) but stored as
a 4-tuple.  Exponent weight vectors (``beta``, ``b``, ``d``) are indexed
by variable, so ``beta[mu - 1]`` is the weight of ``z_mu``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .errors import CaseMismatch, DegenerateDenominator, DimensionMismatch, ZeroBetaMu
from .expcore import (
    TAU,
    ExpPoly,
    Polynomial,
    ep_difference,
    ep_is_zero,
    ep_partial,
    ep_shift,
    poly_partial,
    poly_shift,
)
from .pdde import EquationKind, make_equation, residual

K_TOL = 1e-9


# parameter bundles --------------------------------------------------------


@dataclass(frozen=True)
class AuxiliaryFunction:
    """An arbitrary entire function entering a solution family.

    ``Y1`` functions do not depend on ``z_mu``; ``Y`` functions depend on
    ``z_mu, z_nu`` only through ``a1*a4*z_mu + a2*a3*z_nu``.
    """

    expr: ExpPoly
    coordinate_kind: str = "Y1"

    def __post_init__(self):
        if self.coordinate_kind not in ("Y1", "Y"):
            raise ValueError("coordinate_kind must be 'Y1' or 'Y'")


@dataclass(frozen=True)
class SingleExpParams:
    K3: complex
    K4: complex
    beta: tuple
    beta_const: complex = 0
    periodic: Polynomial | None = None
    aux: AuxiliaryFunction | None = None


@dataclass(frozen=True)
class PairExpParams:
    K1: complex
    K2: complex
    b: tuple
    d: tuple
    A: complex = 0
    B: complex = 0
    periodic1: Polynomial | None = None
    periodic2: Polynomial | None = None
    aux: AuxiliaryFunction | None = None


@dataclass(frozen=True)
class CaseIParams:
    """Case (I) of the E3/E4 families; ``sign=None`` tries both branches."""

    g: Polynomial
    sign: int | None = 1


@dataclass(frozen=True)
class T2CaseIParams:
    h3: AuxiliaryFunction | ExpPoly
    g: Polynomial


# constraints --------------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    """One identity to check.

    ``kind`` is ``"scalar"`` (two complex numbers), ``"poly"`` (``lhs`` is a
    polynomial that must vanish) or ``"func"`` (two exponential polynomials
    that must agree).
    """

    label: str
    kind: str
    lhs: object
    rhs: object = None


@dataclass(frozen=True)
class ConstraintItem:
    label: str
    kind: str
    lhs: object
    rhs: object
    passed: bool
    error: float


@dataclass(frozen=True)
class ConstraintReport:
    items: tuple
    all_pass: bool

    def failed(self):
        return [it for it in self.items if not it.passed]

    def to_dict(self):
        from .printing import format_exppoly, format_poly

        def render(v):
            if v is None:
                return None
            if isinstance(v, complex):
                return [v.real, v.imag]
            if isinstance(v, Polynomial):
                return format_poly(v)
            if isinstance(v, ExpPoly):
                return format_exppoly(v)
            return v

        return {
            "all_pass": self.all_pass,
            "items": [
                {
                    "label": it.label,
                    "kind": it.kind,
                    "lhs": render(it.lhs),
                    "rhs": render(it.rhs),
                    "pass": it.passed,
                    "error": it.error,
                }
                for it in self.items
            ],
        }


def check_constraints(constraints, tol=1e-9):
    items = []
    for con in constraints:
        if con.kind == "scalar":
            lhs, rhs = complex(con.lhs), complex(con.rhs)
            err = abs(lhs - rhs)
            ok = err <= tol * max(1.0, abs(lhs), abs(rhs))
            items.append(ConstraintItem(con.label, "scalar", lhs, rhs, ok, err))
        elif con.kind == "poly":
            p = con.lhs
            items.append(ConstraintItem(con.label, "poly", p, None, p.is_zero(), p.norm_inf()))
        elif con.kind == "func":
            diff = con.lhs - con.rhs
            items.append(
                ConstraintItem(con.label, "func", con.lhs, con.rhs, ep_is_zero(diff), diff.max_coefficient())
            )
        else:
            raise ValueError(f"unknown constraint kind {con.kind!r}")
    return ConstraintReport(tuple(items), all(it.passed for it in items))


# exponential relations ------------------------------------------------------
#
# Each relation reads  exp(scale * sum_j w_j c_j) == R(w).  The right-hand
# sides are written with plain arithmetic so they also accept Polynomial
# entries (the solver substitutes an unknown weight).


def _t1_beta(a, K3, K4, w, mu, nu):
    a1, a2, a3, a4 = a
    bm = w[mu - 1]
    return (a1 / (a3 * K3)) * (K4 * bm / 2 - a4 * K3 * bm * bm / (4 * a1) - a2 * K3 / a1)


def _t1_b(a, K3, K4, w, mu, nu):
    a1, a2, a3, a4 = a
    bm = w[mu - 1]
    return -(1j * a1 * bm + a4 * bm * bm + a2) / a3


def _t1_d(a, K3, K4, w, mu, nu):
    a1, a2, a3, a4 = a
    dm = w[mu - 1]
    return -(-1j * a1 * dm + a4 * dm * dm + a2) / a3


def _t2_beta(a, K3, K4, w, mu, nu):
    a1, a2, a3, a4 = a
    bm, bn = w[mu - 1], w[nu - 1]
    return 1 + (a4 * bn * K3 - a2 * bm * K4) / (2 * (a1 * K4 - a3 * K3))


def _t2_b(a, K3, K4, w, mu, nu):
    a1, a2, a3, a4 = a
    bm, bn = w[mu - 1], w[nu - 1]
    return 1 + (1j * a4 * bn - a2 * bm) / (a1 - 1j * a3)


def _t2_d(a, K3, K4, w, mu, nu):
    a1, a2, a3, a4 = a
    dm, dn = w[mu - 1], w[nu - 1]
    return 1 - (1j * a4 * dn + a2 * dm) / (a1 + 1j * a3)


def _t3_beta(a, K3, K4, w, mu, nu):
    a1, a2, a3, _ = a
    bm = w[mu - 1]
    return (K3 / K4) * (a2 * bm / (2 * a1) + a3 * bm * bm / (4 * a1))


def _t3_b(a, K3, K4, w, mu, nu):
    a1, a2, a3, _ = a
    bm = w[mu - 1]
    return 1j * (a3 * bm * bm + a2 * bm) / a1


def _t3_d(a, K3, K4, w, mu, nu):
    a1, a2, a3, _ = a
    dm = w[mu - 1]
    return -1j * (a3 * dm * dm + a2 * dm) / a1


def _t4_beta(a, K3, K4, w, mu, nu):
    a1, a2, a3, _ = a
    bm, bn = w[mu - 1], w[nu - 1]
    return (K3 / K4) * (a2 * bm / (2 * a1) + a3 * bm * bn / (4 * a1))


def _t4_b(a, K3, K4, w, mu, nu):
    a1, a2, a3, _ = a
    bm, bn = w[mu - 1], w[nu - 1]
    return 1j * (a3 * bm * bn + a2 * bm) / a1


def _t4_d(a, K3, K4, w, mu, nu):
    a1, a2, a3, _ = a
    dm, dn = w[mu - 1], w[nu - 1]
    return -1j * (a3 * dm * dn + a2 * dm) / a1


# (theorem, family) -> (exponent scale, right-hand side)
RELATIONS = {
    ("t1", "beta"): (0.5, _t1_beta),
    ("t1", "b"): (1.0, _t1_b),
    ("t1", "d"): (1.0, _t1_d),
    ("t2", "beta"): (0.5, _t2_beta),
    ("t2", "b"): (1.0, _t2_b),
    ("t2", "d"): (1.0, _t2_d),
    ("t3", "beta"): (0.5, _t3_beta),
    ("t3", "b"): (1.0, _t3_b),
    ("t3", "d"): (1.0, _t3_d),
    ("t4", "beta"): (0.5, _t4_beta),
    ("t4", "b"): (1.0, _t4_b),
    ("t4", "d"): (1.0, _t4_d),
}


def relation_sides(theorem, family, a, c, w, mu, nu=None, K3=1, K4=0):
    """``(lhs, rhs)`` of an exponential relation as complex numbers."""
    scale, rhs_fn = RELATIONS[(theorem, family)]
    lhs = cmath.exp(scale * sum(complex(x) * complex(y) for x, y in zip(w, c)))
    return lhs, complex(rhs_fn(tuple(a), K3, K4, tuple(w), mu, nu))


def _relation_constraint(theorem, family, a, c, w, mu, nu, K3=1, K4=0):
    lhs, rhs = relation_sides(theorem, family, a, c, w, mu, nu, K3, K4)
    scale = "1/2 " if family == "beta" else ""
    return Constraint(f"exp({scale}sum {family}_j c_j) identity", "scalar", lhs, rhs)


# helpers -----------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    theorem: str
    case: str
    f: ExpPoly
    g: Polynomial
    constraints: tuple
    equation: object
    branches: dict = field(default_factory=dict)  # sign -> residual, case I of E3/E4

    def check(self, tol=1e-9):
        return check_constraints(self.constraints, tol)


def _vec(v, dim, name):
    v = tuple(complex(x) for x in v)
    if len(v) != dim:
        raise DimensionMismatch(f"{name} has {len(v)} entries, expected {dim}")
    return v


def _periodic(p, dim, c, forbidden, name):
    """Validate a periodic part; returns it (zero when omitted) and constraints."""
    if p is None:
        return Polynomial.zero(dim), []
    if p.dim != dim:
        raise DimensionMismatch(f"{name} has dimension {p.dim}, expected {dim}")
    if p.constant_term != 0:
        raise ValueError(f"{name} must have zero constant term")
    for j in forbidden:
        if p.depends_on(j):
            raise CaseMismatch(f"{name} must not contain z{j}")
    return p, [Constraint(f"{name}(z+c) == {name}(z)", "func", ExpPoly.from_polynomial(poly_shift(p, c)), ExpPoly.from_polynomial(p))]


def _k_constraints(params):
    out = []
    if isinstance(params, SingleExpParams):
        out.append(Constraint("K3^2 + K4^2 == 1", "scalar", complex(params.K3) ** 2 + complex(params.K4) ** 2, 1))
    if isinstance(params, PairExpParams):
        out.append(Constraint("K1*K2 == 1", "scalar", complex(params.K1) * complex(params.K2), 1))
    return out


def _aux_expr(aux, dim):
    if aux is None:
        return ExpPoly.zero(dim)
    expr = aux.expr if isinstance(aux, AuxiliaryFunction) else aux
    if expr.dim != dim:
        raise DimensionMismatch(f"auxiliary function has dimension {expr.dim}, expected {dim}")
    return expr


def _y1_constraints(aux, mu, label):
    h = aux.expr
    return [Constraint(f"{label} independent of z{mu}", "func", ep_partial(h, mu), ExpPoly.zero(h.dim))]


def _y_constraints(h, a, mu, nu, label):
    a1, a2, a3, a4 = a
    return [
        Constraint(
            f"a2*a3*d{label}/dz{mu} == a1*a4*d{label}/dz{nu}",
            "func",
            ep_partial(h, mu) * (a2 * a3),
            ep_partial(h, nu) * (a1 * a4),
        )
    ]


def _is_zero(x):
    return abs(complex(x)) <= TAU


def _drop(v, mu):
    return tuple(0j if j == mu - 1 else x for j, x in enumerate(v))


# family t1: equation E1 --------------------------------------------------------

T1_CASES = ("I", "I0", "II", "II-d0", "II-b0", "II-b0d0")


def construct_t1(a, mu, c, params, case="I"):
    """Solution family of E1.

    Cases: ``"I"`` (beta_mu != 0), ``"I0"`` (beta_mu == 0), ``"II"``
    (b_mu, d_mu != 0), ``"II-d0"``, ``"II-b0"``, ``"II-b0d0"`` (the named
    weights vanish).
    """
    if case not in T1_CASES:
        raise CaseMismatch(f"unknown case {case!r} for t1")
    a = tuple(complex(x) for x in a)
    a1, a2, a3, a4 = a
    dim = len(c)
    c = _vec(c, dim, "c")
    cons = _k_constraints(params)
    aux = params.aux
    aux_f = _aux_expr(aux, dim)
    if aux is not None:
        cons += _y1_constraints(aux if isinstance(aux, AuxiliaryFunction) else AuxiliaryFunction(aux), mu, "aux")

    def aux_equation(label, rhs):
        lhs = ep_shift(aux_f, c) * a3 + aux_f * a2
        return Constraint(label, "func", lhs, rhs)

    if case in ("I", "I0"):
        if not isinstance(params, SingleExpParams):
            raise CaseMismatch("case I needs SingleExpParams")
        beta = _vec(params.beta, dim, "beta")
        K3, K4 = complex(params.K3), complex(params.K4)
        g1, pc = _periodic(params.periodic, dim, c, [mu], "g1")
        cons += pc
        g = Polynomial.linear(beta, params.beta_const) + g1
        bm = beta[mu - 1]
        if case == "I":
            if _is_zero(bm):
                raise ZeroBetaMu("case I requires beta_mu != 0")
            f = ExpPoly.exp(g * 0.5, 2 * K3 / (a1 * bm)) + aux_f
            cons.append(aux_equation("a3*g2(y1+s1) + a2*g2(y1) == 0", ExpPoly.zero(dim)))
        else:
            if not _is_zero(bm):
                raise CaseMismatch("case I0 requires beta_mu == 0")
            zmu = Polynomial.variable(mu, dim)
            f = ExpPoly.exp(g * 0.5, zmu * (K3 / a1)) + aux_f
            rhs = ExpPoly.exp(g * 0.5, K4 + a2 * c[mu - 1] * K3 / a1)
            cons.append(aux_equation("a2*g4(y1) + a3*g4(y1+s1) == (K4 + a2 c_mu K3/a1) e^(g/2)", rhs))
        cons.append(_relation_constraint("t1", "beta", a, c, beta, mu, None, K3, K4))
    else:
        if not isinstance(params, PairExpParams):
            raise CaseMismatch("case II needs PairExpParams")
        b = _vec(params.b, dim, "b")
        d = _vec(params.d, dim, "d")
        K1, K2 = complex(params.K1), complex(params.K2)
        xi1, pc1 = _periodic(params.periodic1, dim, c, [mu], "xi1")
        xi2, pc2 = _periodic(params.periodic2, dim, c, [mu], "xi2")
        cons += pc1 + pc2
        gamma1 = Polynomial.linear(b, params.A) + xi1
        gamma2 = Polynomial.linear(d, params.B) + xi2
        g = gamma1 + gamma2
        b_zero = case in ("II-b0", "II-b0d0")
        d_zero = case in ("II-d0", "II-b0d0")
        if _is_zero(b[mu - 1]) != b_zero or _is_zero(d[mu - 1]) != d_zero:
            raise CaseMismatch(f"case {case} does not match b_mu={b[mu - 1]}, d_mu={d[mu - 1]}")
        zmu = Polynomial.variable(mu, dim)
        if b_zero:
            t1 = ExpPoly.exp(gamma1, zmu * (K1 / (2 * a1)))
        else:
            t1 = ExpPoly.exp(gamma1, K1 / (2 * a1 * b[mu - 1]))
        if d_zero:
            t2 = ExpPoly.exp(gamma2, zmu * (K2 / (2 * a1)))
        else:
            t2 = ExpPoly.exp(gamma2, K2 / (2 * a1 * d[mu - 1]))
        f = t1 + t2 + aux_f
        rhs = ExpPoly.zero(dim)
        if d_zero:
            rhs = rhs + ExpPoly.exp(gamma2, (K2 / 2) * (a2 * c[mu - 1] / a1 + 1j))
        if b_zero:
            rhs = rhs + ExpPoly.exp(gamma1, (K1 / 2) * (a2 * c[mu - 1] / a1 - 1j))
        cons.append(aux_equation("a3*g(y1+s1) + a2*g(y1) == forcing", rhs))
        cons.append(_relation_constraint("t1", "b", a, c, b, mu, None))
        cons.append(_relation_constraint("t1", "d", a, c, d, mu, None))
    eq = make_equation(EquationKind.E1, a, mu, c, g)
    return Construction("t1", case, f, g, tuple(cons), eq)


# family t2: equation E2 --------------------------------------------------------

T2_CASES = ("I", "II-single", "II-pair")


def _h_constraints(h, a, mu, nu, c, label):
    """Homogeneous conditions making ``h`` invisible to both E2 pieces."""
    a1, a2, a3, a4 = a
    dh = ep_difference(h, c)
    return _y_constraints(h, a, mu, nu, label) + [
        Constraint(f"{label}(y+s) - {label}(y) == -(a2/a1) d{label}/dz{mu}", "func", dh, ep_partial(h, mu) * (-a2 / a1)),
        Constraint(f"{label}(y+s) - {label}(y) == -(a4/a3) d{label}/dz{nu}", "func", dh, ep_partial(h, nu) * (-a4 / a3)),
    ]


def construct_t2(a, mu, nu, c, params, case="II-single"):
    if case not in T2_CASES:
        raise CaseMismatch(f"unknown case {case!r} for t2")
    if nu is None:
        raise CaseMismatch("t2 requires nu")
    a = tuple(complex(x) for x in a)
    a1, a2, a3, a4 = a
    dim = len(c)
    c = _vec(c, dim, "c")

    if case == "I":
        if not isinstance(params, T2CaseIParams):
            raise CaseMismatch("case I needs T2CaseIParams")
        h = _aux_expr(params.h3, dim)
        g = params.g
        cons = _y_constraints(h, a, mu, nu, "h3")
        lhs = ep_difference(h, c) * a1 + ep_partial(h, mu) * a2
        rhs = ExpPoly.exp(g * 0.5, a1 / cmath.sqrt(a1 * a1 + a3 * a3))
        cons.append(Constraint("a1(h3(y+s)-h3(y)) + a2 dh3/dz_mu == a1/sqrt(a1^2+a3^2) e^(g/2)", "func", lhs, rhs))
        eq = make_equation(EquationKind.E2, a, mu, c, g, nu=nu)
        return Construction("t2", case, h, g, tuple(cons), eq)

    cons = _k_constraints(params)
    aux_f = _aux_expr(params.aux, dim)
    if params.aux is not None:
        cons += _h_constraints(aux_f, a, mu, nu, c, "h")

    if case == "II-single":
        if not isinstance(params, SingleExpParams):
            raise CaseMismatch("case II-single needs SingleExpParams")
        beta = _vec(params.beta, dim, "beta")
        K3, K4 = complex(params.K3), complex(params.K4)
        g1, pc = _periodic(params.periodic, dim, c, [mu, nu], "g1")
        cons += pc
        den = a2 * a3 * beta[mu - 1] - a1 * a4 * beta[nu - 1]
        num = a3 * K3 - a1 * K4
        if _is_zero(den):
            raise DegenerateDenominator("a2*a3*beta_mu - a1*a4*beta_nu vanishes")
        if _is_zero(num):
            raise DegenerateDenominator("a3*K3 - a1*K4 vanishes")
        g = Polynomial.linear(beta, params.beta_const) + g1
        f = ExpPoly.exp(g * 0.5, 2 * num / den) + aux_f
        cons.append(_relation_constraint("t2", "beta", a, c, beta, mu, nu, K3, K4))
    else:
        if not isinstance(params, PairExpParams):
            raise CaseMismatch("case II-pair needs PairExpParams")
        b = _vec(params.b, dim, "b")
        d = _vec(params.d, dim, "d")
        K1, K2 = complex(params.K1), complex(params.K2)
        xi1, pc1 = _periodic(params.periodic1, dim, c, [mu, nu], "xi1")
        xi2, pc2 = _periodic(params.periodic2, dim, c, [mu, nu], "xi2")
        cons += pc1 + pc2
        den_b = a2 * a3 * b[mu - 1] - a1 * a4 * b[nu - 1]
        den_d = a2 * a3 * d[mu - 1] - a1 * a4 * d[nu - 1]
        if _is_zero(den_b) or _is_zero(den_d):
            raise DegenerateDenominator("a2*a3*chi_mu - a1*a4*chi_nu vanishes")
        gamma1 = Polynomial.linear(b, params.A) + xi1
        gamma2 = Polynomial.linear(d, params.B) + xi2
        g = gamma1 + gamma2
        f = (
            ExpPoly.exp(gamma1, (1j * a3 - a1) * K1 / (2j * den_b))
            + ExpPoly.exp(gamma2, (1j * a3 + a1) * K2 / (2j * den_d))
            + aux_f
        )
        cons.append(_relation_constraint("t2", "b", a, c, b, mu, nu))
        cons.append(_relation_constraint("t2", "d", a, c, d, mu, nu))
    eq = make_equation(EquationKind.E2, a, mu, c, g, nu=nu)
    return Construction("t2", case, f, g, tuple(cons), eq)


# families t3 and t4: equations E3 / E4 -------------------------------------

T34_CASES = ("I", "II-single", "II-pair")


def _case_one_identity(g, a, mu, nu):
    _, a2, a3, _ = a
    gm = poly_partial(g, mu)
    if nu is None:
        return gm * (2 * a2) + gm * gm * a3 + poly_partial(gm, mu) * (2 * a3)
    gn = poly_partial(g, nu)
    return gm * (2 * a2) + gm * gn * a3 + poly_partial(gm, nu) * (2 * a3)


def _construct_t34(theorem, a, mu, nu, c, params, case):
    if case not in T34_CASES:
        raise CaseMismatch(f"unknown case {case!r} for {theorem}")
    kind = EquationKind.E3 if theorem == "t3" else EquationKind.E4
    a = [complex(x) for x in a]
    if len(a) == 3:
        a.append(1.0 + 0j)
    a = tuple(a)
    a1 = a[0]
    dim = len(c)
    c = _vec(c, dim, "c")
    forbidden = [mu] if nu is None else [mu, nu]

    if case == "I":
        if not isinstance(params, CaseIParams):
            raise CaseMismatch("case I needs CaseIParams")
        g = params.g
        ident = _case_one_identity(g, a, mu, nu)
        label = "2a2 g_mu + a3 g_mu^2 + 2a3 g_mumu == 0" if nu is None else "2a2 g_mu + a3 g_mu g_nu + 2a3 g_munu == 0"
        cons = (Constraint(label, "poly", ident),)
        eq = make_equation(kind, a, mu, c, g, nu=nu)
        back = poly_shift(g, tuple(-x for x in c)) * 0.5
        signs = (params.sign,) if params.sign is not None else (1, -1)
        candidates = {s: ExpPoly.exp(back, s / a1) for s in signs}
        branches = {s: residual(eq, fs) for s, fs in candidates.items()}
        chosen = next((s for s in signs if ep_is_zero(branches[s])), signs[0])
        return Construction(theorem, case, candidates[chosen], g, cons, eq, branches)

    cons = _k_constraints(params)
    if case == "II-single":
        if not isinstance(params, SingleExpParams):
            raise CaseMismatch("case II-single needs SingleExpParams")
        beta = _vec(params.beta, dim, "beta")
        K3, K4 = complex(params.K3), complex(params.K4)
        if _is_zero(beta[mu - 1]):
            raise ZeroBetaMu("case II requires beta_mu != 0")
        if _is_zero(K3) or _is_zero(K4):
            raise DegenerateDenominator("case II requires K3, K4 != 0")
        g1, pc = _periodic(params.periodic, dim, c, forbidden, "g1")
        cons += pc
        g = Polynomial.linear(beta, params.beta_const) + g1
        shifted = Polynomial.linear(beta, params.beta_const - sum(x * y for x, y in zip(beta, c))) + g1
        f = ExpPoly.exp(shifted * 0.5, K3 / a1)
        cons.append(_relation_constraint(theorem, "beta", a, c, beta, mu, nu, K3, K4))
    else:
        if not isinstance(params, PairExpParams):
            raise CaseMismatch("case II-pair needs PairExpParams")
        b = _vec(params.b, dim, "b")
        d = _vec(params.d, dim, "d")
        K1, K2 = complex(params.K1), complex(params.K2)
        if _is_zero(b[mu - 1]) or _is_zero(d[mu - 1]):
            raise ZeroBetaMu("case II requires b_mu != 0 and d_mu != 0")
        xi1, pc1 = _periodic(params.periodic1, dim, c, forbidden, "xi1")
        xi2, pc2 = _periodic(params.periodic2, dim, c, forbidden, "xi2")
        cons += pc1 + pc2
        bc = sum(x * y for x, y in zip(b, c))
        dc = sum(x * y for x, y in zip(d, c))
        g = Polynomial.linear(b, params.A) + xi1 + Polynomial.linear(d, params.B) + xi2
        f = ExpPoly.exp(Polynomial.linear(b, params.A - bc) + xi1, K1 / (2 * a1)) + ExpPoly.exp(
            Polynomial.linear(d, params.B - dc) + xi2, K2 / (2 * a1)
        )
        cons.append(_relation_constraint(theorem, "b", a, c, b, mu, nu))
        cons.append(_relation_constraint(theorem, "d", a, c, d, mu, nu))
    eq = make_equation(kind, a, mu, c, g, nu=nu)
    return Construction(theorem, case, f, g, tuple(cons), eq)


def construct_t3(a, mu, c, params, case="I"):
    return _construct_t34("t3", a, mu, None, c, params, case)


def construct_t4(a, mu, nu, c, params, case="I"):
    if nu is None:
        raise CaseMismatch("t4 requires nu")
    return _construct_t34("t4", a, mu, nu, c, params, case)


def construct(theorem, a, mu, c, params, case, nu=None):
    """Dispatch on ``theorem`` in ``{"t1", "t2", "t3", "t4"}``."""
    theorem = str(theorem).lower()
    if not theorem.startswith("t"):
        theorem = "t" + theorem
    if theorem == "t1":
        return construct_t1(a, mu, c, params, case)
    if theorem == "t2":
        return construct_t2(a, mu, nu, c, params, case)
    if theorem == "t3":
        return construct_t3(a, mu, c, params, case)
    if theorem == "t4":
        return construct_t4(a, mu, nu, c, params, case)
    raise CaseMismatch(f"unknown theorem {theorem!r}")


# particular auxiliary functions ------------------------------------------------


def particular_y1_aux(a, mu, c, forcing):
    """A ``z_mu``-free ``h`` with ``a3*h(z+c) + a2*h(z) == forcing``.

    ``forcing`` must be a sum of constant multiples of exponentials whose
    exponents do not involve ``z_mu``.  Non-resonant terms get a constant
    multiple of the same exponential; a resonant term (``a2 + a3*m == 0``
    for its shift multiplier ``m``) gets a linear factor ``lam * z_j`` in a
    variable ``j != mu`` with ``c_j != 0``.
    """
    a1, a2, a3, _ = (complex(x) for x in a)
    dim = forcing.dim
    out = ExpPoly.zero(dim)
    for t in forcing.terms:
        if not t.coeff.is_constant() or t.exponent.depends_on(mu):
            raise ValueError("forcing terms must be constant multiples of z_mu-free exponentials")
        kappa = t.coeff.constant_term
        mult = cmath.exp(poly_shift(t.exponent, c).constant_term)
        denom = a2 + a3 * mult
        if abs(denom) > 1e-7 * max(abs(a2), abs(a3 * mult)):
            out = out + ExpPoly.exp(t.exponent, kappa / denom)
            continue
        j = next((k for k in range(1, dim + 1) if k != mu and abs(c[k - 1]) > TAU), None)
        if j is None:
            raise ValueError("resonant forcing needs a shift component c_j != 0 with j != mu")
        lam = kappa / (a3 * mult * c[j - 1])
        out = out + ExpPoly.exp(t.exponent, Polynomial.variable(j, dim) * lam)
    return AuxiliaryFunction(out, "Y1")
