"""Pure numpy implementation of the batch evaluation kernels.

Mirrors ``_ckernels.pyx`` exactly; used when the compiled module is not
available or when ``FERMAT_PDDE_PUREPY`` is set.

Layout: an exponential polynomial with T terms is passed as two CSR-style
blocks.  Term t has coefficient monomials ``cexps[coff[t]:coff[t+1]]`` with
values ``ccoefs[...]`` and exponent monomials ``eexps[eoff[t]:eoff[t+1]]``.
"""
import numpy as np


def _powers(points, maxdeg):
    P, n = points.shape
    pw = np.ones((P, n, maxdeg + 1), dtype=np.complex128)
    for k in range(1, maxdeg + 1):
        pw[:, :, k] = pw[:, :, k - 1] * points
    return pw


def _monomials(pw, exps):
    # (P, M): product over variables of z_j ** e_j
    if exps.shape[0] == 0:
        return np.ones((pw.shape[0], 0), dtype=np.complex128)
    n = exps.shape[1]
    return np.prod(pw[:, np.arange(n)[None, :], exps], axis=2)


def poly_eval_batch(exps, coefs, points):
    points = np.ascontiguousarray(points, dtype=np.complex128)
    if exps.shape[0] == 0:
        return np.zeros(points.shape[0], dtype=np.complex128)
    pw = _powers(points, int(exps.max()))
    return _monomials(pw, exps) @ coefs


def exppoly_eval_batch(cexps, ccoefs, coff, eexps, ecoefs, eoff, points):
    points = np.ascontiguousarray(points, dtype=np.complex128)
    P = points.shape[0]
    values = np.zeros(P, dtype=np.complex128)
    maxre = np.full(P, -np.inf)
    T = len(coff) - 1
    if T == 0:
        return values, maxre
    maxdeg = 0
    if cexps.size:
        maxdeg = max(maxdeg, int(cexps.max()))
    if eexps.size:
        maxdeg = max(maxdeg, int(eexps.max()))
    pw = _powers(points, maxdeg)
    cmono = _monomials(pw, cexps) * ccoefs
    emono = _monomials(pw, eexps) * ecoefs
    for t in range(T):
        cval = cmono[:, coff[t] : coff[t + 1]].sum(axis=1)
        eval_ = emono[:, eoff[t] : eoff[t + 1]].sum(axis=1)
        maxre = np.maximum(maxre, eval_.real)
        values += cval * np.exp(eval_)
    return values, maxre
