# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled batch evaluation kernels (see _pykernels.py for the layout).

Monomials are re-encoded as sparse ``(variable, power)`` factor lists so
the inner loop touches only the nonzero exponents.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp, cos, sin, INFINITY

cnp.import_array()

ctypedef double complex cplx
ctypedef cnp.int64_t i64


cdef inline cplx _cexp(cplx w) noexcept nogil:
    cdef double r = exp(w.real)
    return r * cos(w.imag) + 1j * (r * sin(w.imag))


cdef inline void _fill_powers(const cplx* z, Py_ssize_t n, cplx* pw, Py_ssize_t stride) noexcept nogil:
    cdef Py_ssize_t j, k
    for j in range(n):
        pw[j * stride] = 1.0
        for k in range(1, stride):
            pw[j * stride + k] = pw[j * stride + k - 1] * z[j]


cdef inline cplx _poly_at(const i64* fstart, const i64* fidx, const cplx* coefs,
                          Py_ssize_t lo, Py_ssize_t hi, const cplx* pw) noexcept nogil:
    cdef Py_ssize_t m, f
    cdef cplx acc = 0, term
    for m in range(lo, hi):
        term = coefs[m]
        for f in range(fstart[m], fstart[m + 1]):
            term = term * pw[fidx[f]]
        acc = acc + term
    return acc


def _sparse(exps, stride):
    """CSR of flat power-table indices ``j*stride + e`` for each monomial."""
    exps = np.asarray(exps, dtype=np.int64)
    if exps.ndim != 2 or exps.shape[0] == 0:
        return np.zeros(exps.shape[0] + 1 if exps.ndim == 2 else 1, dtype=np.int64), np.zeros(0, dtype=np.int64)
    rows, cols = np.nonzero(exps)
    idx = cols * stride + exps[rows, cols]
    start = np.zeros(exps.shape[0] + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=exps.shape[0]), out=start[1:])
    return start, np.ascontiguousarray(idx, dtype=np.int64)


def _maxdeg(a):
    return int(a.max()) if a.size else 0


def poly_eval_batch(exps, coefs, points):
    cdef cplx[:, ::1] pts = np.ascontiguousarray(points, dtype=np.complex128)
    cdef Py_ssize_t P = pts.shape[0], n = pts.shape[1], p
    cdef Py_ssize_t stride = _maxdeg(exps) + 1
    s, i = _sparse(exps, stride)
    cdef const i64[::1] fstart = s
    cdef const i64[::1] fidx = i if i.size else np.zeros(1, dtype=np.int64)
    cdef const cplx[::1] c = np.ascontiguousarray(coefs, dtype=np.complex128) if len(coefs) else np.zeros(1, dtype=np.complex128)
    cdef Py_ssize_t M = len(coefs)
    out = np.zeros(P, dtype=np.complex128)
    if M == 0 or P == 0:
        return out
    cdef cplx[::1] o = out
    cdef cplx[::1] pw = np.empty(max(n * stride, 1), dtype=np.complex128)
    with nogil:
        for p in range(P):
            _fill_powers(&pts[p, 0], n, &pw[0], stride)
            o[p] = _poly_at(&fstart[0], &fidx[0], &c[0], 0, M, &pw[0])
    return out


def exppoly_eval_batch(cexps, ccoefs, coff, eexps, ecoefs, eoff, points):
    cdef cplx[:, ::1] pts = np.ascontiguousarray(points, dtype=np.complex128)
    cdef Py_ssize_t P = pts.shape[0], n = pts.shape[1], p, t
    cdef Py_ssize_t T = len(coff) - 1
    values = np.zeros(P, dtype=np.complex128)
    maxre = np.full(P, -np.inf)
    if T <= 0 or P == 0:
        return values, maxre
    cdef Py_ssize_t stride = max(_maxdeg(cexps), _maxdeg(eexps)) + 1
    cs, ci = _sparse(cexps, stride)
    es, ei = _sparse(eexps, stride)
    one = np.zeros(1, dtype=np.int64)
    cdef const i64[::1] cstart = cs
    cdef const i64[::1] cidx = ci if ci.size else one
    cdef const i64[::1] estart = es
    cdef const i64[::1] eidx = ei if ei.size else one
    cdef const cplx[::1] cc = np.ascontiguousarray(ccoefs, dtype=np.complex128) if len(ccoefs) else np.zeros(1, dtype=np.complex128)
    cdef const cplx[::1] ec = np.ascontiguousarray(ecoefs, dtype=np.complex128) if len(ecoefs) else np.zeros(1, dtype=np.complex128)
    cdef const i64[::1] co = np.ascontiguousarray(coff, dtype=np.int64)
    cdef const i64[::1] eo = np.ascontiguousarray(eoff, dtype=np.int64)
    cdef cplx[::1] v = values
    cdef double[::1] mr = maxre
    cdef cplx[::1] pw = np.empty(max(n * stride, 1), dtype=np.complex128)
    cdef cplx cval, w, acc
    cdef double best
    with nogil:
        for p in range(P):
            _fill_powers(&pts[p, 0], n, &pw[0], stride)
            acc = 0
            best = -INFINITY
            for t in range(T):
                cval = _poly_at(&cstart[0], &cidx[0], &cc[0], co[t], co[t + 1], &pw[0])
                w = _poly_at(&estart[0], &eidx[0], &ec[0], eo[t], eo[t + 1], &pw[0])
                if w.real > best:
                    best = w.real
                acc = acc + cval * _cexp(w)
            v[p] = acc
            mr[p] = best
    return values, maxre
