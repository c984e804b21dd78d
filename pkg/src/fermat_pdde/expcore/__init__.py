"""Polynomial and exponential-polynomial algebra over C^n."""
from .exppoly import (
    ExpPoly,
    ExpTerm,
    ep_add,
    ep_antiderivative,
    ep_difference,
    ep_equal,
    ep_eval,
    ep_eval_many,
    ep_is_zero,
    ep_mul,
    ep_normalize,
    ep_order,
    ep_partial,
    ep_scale,
    ep_shift,
)
from .kernels import BACKEND
from .periodic import build_periodic_polynomial, is_periodic
from .polynomial import (
    TAU,
    Polynomial,
    poly_add,
    poly_compose_linear,
    poly_eval,
    poly_mul,
    poly_partial,
    poly_scale,
    poly_shift,
)

__all__ = [
    "BACKEND",
    "TAU",
    "ExpPoly",
    "ExpTerm",
    "Polynomial",
    "build_periodic_polynomial",
    "ep_add",
    "ep_antiderivative",
    "ep_difference",
    "ep_equal",
    "ep_eval",
    "ep_eval_many",
    "ep_is_zero",
    "ep_mul",
    "ep_normalize",
    "ep_order",
    "ep_partial",
    "ep_scale",
    "ep_shift",
    "is_periodic",
    "poly_add",
    "poly_compose_linear",
    "poly_eval",
    "poly_mul",
    "poly_partial",
    "poly_scale",
    "poly_shift",
]
