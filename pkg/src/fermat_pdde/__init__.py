"""Symbolic and numeric toolkit for Fermat-type PDDEs in several complex variables."""
from .expcore import BACKEND, ExpPoly, Polynomial
from .parser import parse_constant, parse_expression, parse_polynomial
from .pdde import EquationKind, SamplingConfig, Verdict, make_equation, residual, verify

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EquationKind",
    "ExpPoly",
    "Polynomial",
    "SamplingConfig",
    "Verdict",
    "__version__",
    "make_equation",
    "parse_constant",
    "parse_expression",
    "parse_polynomial",
    "residual",
    "verify",
]
