# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: hot inner loops shared by the norm solvers.

Contract mirrors ``_ref.py``; keep both in sync.
"""

from libc.math cimport exp, log, fabs, pow, sin, INFINITY, pi

import numpy as np

EXP_CAP = 700.0

cdef double _EXP_CAP = 700.0
cdef double _G = 7.0
cdef double[9] _C = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]
cdef double _HALF_LOG_2PI = 0.9189385332046727


cdef inline double _phi(double p, double x) nogil:
    cdef double ax = fabs(x)
    if ax <= 1.0:
        return 0.5 * (ax * ax)
    if p == INFINITY:
        return INFINITY
    if p * log(ax) > _EXP_CAP:
        return INFINITY
    return pow(ax, p) / p - 1.0 / p + 0.5


def phi_scalar(double p, double x):
    return _phi(p, x)


def phi_grid(double p, xs):
    cdef double[::1] v = np.ascontiguousarray(xs, dtype=np.float64)
    out_arr = np.empty(v.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(v.shape[0]):
        out[i] = _phi(p, v[i])
    return out_arr


def weighted_exp_sum(args, weights):
    cdef double[::1] a = np.ascontiguousarray(args, dtype=np.float64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    cdef double m = -INFINITY
    cdef double s = 0.0
    cdef double total
    cdef bint any_live = 0
    for i in range(n):
        if w[i] > 0.0:
            any_live = 1
            if a[i] > m:
                m = a[i]
    if not any_live:
        return 0.0
    if m == INFINITY:
        return INFINITY
    if m == -INFINITY:
        return 0.0
    for i in range(n):
        if w[i] > 0.0:
            s += w[i] * exp(a[i] - m)
    if s <= 0.0:
        return 0.0
    total = m + log(s)
    if total > _EXP_CAP:
        return INFINITY
    return exp(total)


def log_sum_exp(values, weights):
    cdef double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t i
    cdef double m = -INFINITY
    cdef double s = 0.0
    cdef bint any_live = 0
    for i in range(n):
        if w[i] > 0.0:
            any_live = 1
            if v[i] > m:
                m = v[i]
    if not any_live:
        return -INFINITY
    if m == INFINITY:
        return INFINITY
    if m == -INFINITY:
        return -INFINITY
    for i in range(n):
        if w[i] > 0.0:
            s += w[i] * exp(v[i] - m)
    if s <= 0.0:
        return -INFINITY
    return m + log(s)


def tau_margin(double q, double k, ts, ln_mgf):
    cdef double[::1] t = np.ascontiguousarray(ts, dtype=np.float64)
    cdef double[::1] lm = np.ascontiguousarray(ln_mgf, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i
    cdef double best = -INFINITY
    cdef double ph, m
    for i in range(n):
        ph = _phi(q, k * t[i])
        if ph == INFINITY:
            continue
        m = lm[i] - ph
        if m > best:
            best = m
    return best


cdef double _lgamma(double x):
    cdef double z, base, s
    cdef int i
    if x < 0.5:
        return log(pi / sin(pi * x)) - _lgamma(1.0 - x)
    z = x - 1.0
    base = z + _G + 0.5
    s = _C[0]
    for i in range(1, 9):
        s += _C[i] / (z + i)
    return _HALF_LOG_2PI + (z + 0.5) * log(base) - base + log(s)


def lgamma(double x):
    if x <= 0.0:
        raise ValueError("lgamma requires x > 0")
    return _lgamma(x)
