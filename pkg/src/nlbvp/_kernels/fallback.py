"""Vectorized numpy implementation of the batched root kernels.

Reference semantics for the compiled extension.  The m-th root of
``cot x = -x`` lies in ((m-1/2)pi, m pi) and behaves like
m pi - 1/(m pi) for large m; the k-th positive root of ``tan x = x`` lies in
(k pi, (k+1/2)pi) and behaves like (k+1/2)pi - 1/((k+1/2)pi).  From those
guesses Newton converges quadratically on the pole-free forms

    cot x = -x  ->  g(x) = cos x + x sin x,   g'(x) = x cos x
    tan x =  x  ->  h(x) = sin x - x cos x,   h'(x) = x sin x

whose derivatives stay bounded away from zero on the relevant intervals.
"""

from __future__ import annotations

import math

import numpy as np

_CHUNK = 1 << 20
# Quadratic convergence reaches float64 accuracy in <= 4 sweeps from the
# asymptotic guesses (worst case m = k = 1); two extra sweeps are margin.
_NEWTON_SWEEPS = 6


def cot_roots(m_start: int, count: int) -> np.ndarray:
    """Roots x_m of cot x = -x for m = m_start .. m_start+count-1."""
    m = np.arange(m_start, m_start + count, dtype=np.float64)
    c = m * np.pi
    x = c - 1.0 / c
    for _ in range(_NEWTON_SWEEPS):
        x = x - (np.cos(x) + x * np.sin(x)) / (x * np.cos(x))
    return x


def tan_roots(k_start: int, count: int) -> np.ndarray:
    """Strictly positive roots x_k of tan x = x for k = k_start .. k_start+count-1."""
    k = np.arange(k_start, k_start + count, dtype=np.float64)
    c = (k + 0.5) * np.pi
    x = c - 1.0 / c
    for _ in range(_NEWTON_SWEEPS):
        x = x - (np.sin(x) - x * np.cos(x)) / (x * np.sin(x))
    return x


def cot_root_power_sum(count: int, two_p: int) -> float:
    """sum_{m=1..count} x_m^(-two_p) over the roots of cot x = -x."""
    return _chunked_power_sum(cot_roots, count, two_p)


def tan_root_power_sum(count: int, two_p: int) -> float:
    """sum_{k=1..count} x_k^(-two_p) over the roots of tan x = x."""
    return _chunked_power_sum(tan_roots, count, two_p)


def _chunked_power_sum(batch, count: int, two_p: int) -> float:
    # Pairwise summation within each chunk, exact combination across chunks.
    parts = []
    lo = 1
    while lo <= count:
        n = min(count - lo + 1, _CHUNK)
        x = batch(lo, n)
        parts.append(float(np.sum(x ** float(-two_p))))
        lo += n
    return math.fsum(parts)
