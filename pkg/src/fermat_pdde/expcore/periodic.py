"""Shift-periodic polynomials, i.e. ``G(z + c) == G(z)``.

Members are built as sums ``sum_k Phi_k(t_k . z)`` where each direction
``t_k`` is orthogonal to the shift (``t_k . c == 0``).
"""
from ..errors import DimensionMismatch, NotInKernel
from .polynomial import TAU, Polynomial, poly_compose_linear, poly_shift


def is_periodic(G, c):
    if len(c) != G.dim:
        raise DimensionMismatch(f"shift has {len(c)} coordinates, expected {G.dim}")
    return (poly_shift(G, c) - G).is_zero()


def _as_coefficients(phi):
    if isinstance(phi, Polynomial):
        if phi.dim != 1:
            raise ValueError("profile polynomial must be univariate")
        deg = phi.degree
        if deg < 0:
            return []
        return [phi.coefficient((k,)) for k in range(int(deg) + 1)]
    return list(phi)


def build_periodic_polynomial(c, directions, dim=None):
    """Return ``sum Phi(t . z)`` over ``directions = [(t, Phi), ...]``.

    ``Phi`` is a univariate :class:`Polynomial` or a coefficient list
    (``Phi[k]`` multiplies ``u**k``).  Raises :class:`NotInKernel` when a
    direction is not orthogonal to ``c``.
    """
    dim = dim or len(c)
    if len(c) != dim:
        raise DimensionMismatch(f"shift has {len(c)} coordinates, expected {dim}")
    total = Polynomial.zero(dim)
    for t, phi in directions:
        if len(t) != dim:
            raise DimensionMismatch(f"direction has {len(t)} entries, expected {dim}")
        dot = sum(complex(a) * complex(b) for a, b in zip(t, c))
        mass = sum(abs(complex(a) * complex(b)) for a, b in zip(t, c))
        if abs(dot) > TAU * max(1.0, mass):
            raise NotInKernel(f"direction {list(t)} has t.c = {dot:.3g}, not 0")
        total = total + poly_compose_linear(_as_coefficients(phi), t)
    return total
