# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batched root kernels.

Same contracts as nlbvp._kernels.fallback; see that module for the choice of
initial guesses and pole-free Newton forms.
"""

from libc.math cimport M_PI, cos, fabs, pow, sin

import numpy as np


cdef double _cot_root(double m) noexcept nogil:
    cdef double c = m * M_PI
    cdef double x = c - 1.0 / c
    cdef double dx
    cdef int it
    for it in range(40):
        dx = (cos(x) + x * sin(x)) / (x * cos(x))
        x -= dx
        if fabs(dx) <= 1e-15 * x:
            break
    return x


cdef double _tan_root(double k) noexcept nogil:
    cdef double c = (k + 0.5) * M_PI
    cdef double x = c - 1.0 / c
    cdef double dx
    cdef int it
    for it in range(40):
        dx = (sin(x) - x * cos(x)) / (x * sin(x))
        x -= dx
        if fabs(dx) <= 1e-15 * x:
            break
    return x


def cot_roots(m_start: int, count: int):
    """Roots x_m of cot x = -x for m = m_start .. m_start+count-1."""
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] v = out
    cdef long i, base = m_start
    for i in range(count):
        v[i] = _cot_root(<double> (base + i))
    return out


def tan_roots(k_start: int, count: int):
    """Strictly positive roots x_k of tan x = x for k = k_start .. k_start+count-1."""
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] v = out
    cdef long i, base = k_start
    for i in range(count):
        v[i] = _tan_root(<double> (base + i))
    return out


def cot_root_power_sum(count: int, two_p: int):
    """sum_{m=1..count} x_m^(-two_p) over the roots of cot x = -x (Kahan)."""
    cdef double s = 0.0, comp = 0.0, term, y, t
    cdef long m, n = count
    cdef int q = two_p
    with nogil:
        for m in range(1, n + 1):
            term = pow(_cot_root(<double> m), -q)
            y = term - comp
            t = s + y
            comp = (t - s) - y
            s = t
    return s


def tan_root_power_sum(count: int, two_p: int):
    """sum_{k=1..count} x_k^(-two_p) over the roots of tan x = x (Kahan)."""
    cdef double s = 0.0, comp = 0.0, term, y, t
    cdef long k, n = count
    cdef int q = two_p
    with nogil:
        for k in range(1, n + 1):
            term = pow(_tan_root(<double> k), -q)
            y = term - comp
            t = s + y
            comp = (t - s) - y
            s = t
    return s
