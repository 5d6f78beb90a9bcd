"""Power sums over Bessel-function zeros and the unit-disk spectrum.

sigma_{2l}(nu) = sum_{n>=1} j_{nu,n}^(-2l), where j_{nu,n} is the n-th
positive zero of z^(-nu) J_nu(z).  The base value sigma_2(nu) = 1/(4(nu+1))
seeds the convolution recursion

    (n + nu) sigma_{2n}(nu) = sum_{k=1}^{n-1} sigma_{2k}(nu) sigma_{2(n-k)}(nu),

whose n = 2 instance reproduces the closed form
sigma_4(nu) = 1/(16 (nu+1)^2 (nu+2)); higher instances are validated against
truncated sums over computed zeros.

For the unit disk the eigenvalues of the analogous coupled problem are
j_{0,n}^2 with multiplicity 3 and j_{m-1,n}^2 (m >= 2) with multiplicity 2,
so the reciprocal power sums are

    3 sigma_{2l}(0) + 2 sum_{nu>=1} sigma_{2l}(nu),

divergent at l = 1 (sigma_2(nu) ~ 1/(4 nu) is not summable) and finite for
l >= 2.  The nu tail is certified through
sigma_{2l}(nu) <= sigma_2(nu)^(l-2) sigma_4(nu) = 4^(-l) (nu+1)^(-l) (nu+2)^(-1),
which follows from a_n^l <= (max_n a_n)^(l-2) * a_n^2 with a_n = j^(-2) and
max_n a_n < sigma_2; integral comparison then bounds the sum past the cutoff.

The zero finder evaluates J_nu by ascending series for small arguments and
by backward recurrence with even-order normalization for large ones, and
brackets zeros through the classical interlacing
j_{nu-1,n} < j_{nu,n} < j_{nu-1,n+1} (seeded at nu = 0 by the zeros n pi of
the half-order function, giving (n-1) pi < j_{0,n} < n pi).  It exists to
validate the sigma recursion at oracle scale, not as a general
special-function library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

MAX_ORDER = 10
MAX_INDEX = 1000
ZERO_REL_TOL = 1e-12  # certified relative accuracy of the computed zeros

_SERIES_CUTOFF = 10.0  # ascending series below, backward recurrence above
_SERIES_TERMS = 60
_RESCALE = 1e250


class DivergentSumError(ArithmeticError):
    """Raised for the l = 1 disk sum, which diverges like the harmonic series."""


@dataclass(frozen=True)
class DiskSum:
    """A truncated disk power sum with its certified truncation bound."""

    power: int
    value: float
    nu_cutoff: int
    tail_bound: float


@lru_cache(maxsize=None)
def sigma(l: int, nu: int) -> Fraction:
    """Exact sigma_{2l}(nu) by the convolution recursion."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if l == 1:
        return Fraction(1, 4 * (nu + 1))
    acc = Fraction(0)
    for k in range(1, l):
        acc += sigma(k, nu) * sigma(l - k, nu)
    return acc / (l + nu)


def _sigma_row(l: int, nu: np.ndarray) -> np.ndarray:
    """Float sigma_{2l} over an array of orders (same recursion, vectorized)."""
    rows = [1.0 / (4.0 * (nu + 1.0))]
    for n in range(2, l + 1):
        acc = np.zeros_like(rows[0])
        for k in range(1, n):
            acc += rows[k - 1] * rows[n - k - 1]
        rows.append(acc / (n + nu))
    return rows[l - 1]


def disk_power_sum(l: int, tol: float = 1e-9) -> DiskSum:
    """3 sigma_{2l}(0) + 2 sum_{nu=1..V} sigma_{2l}(nu) with tail bound <= tol."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if l == 1:
        raise DivergentSumError(
            "the reciprocal disk eigenvalue sum diverges: sigma_2(nu) = 1/(4(nu+1))"
        )
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    # tail(V) = 2 * 4^-l * (V+1)^-l / l  <=  tol
    cutoff = max(16, math.ceil((2.0 / (4.0**l * l * tol)) ** (1.0 / l)) - 1)
    parts = []
    lo = 1
    while lo <= cutoff:
        n = min(cutoff - lo + 1, 1 << 20)
        nu = np.arange(lo, lo + n, dtype=np.float64)
        parts.append(float(np.sum(_sigma_row(l, nu))))
        lo += n
    tail = 2.0 / (4.0**l * l * (cutoff + 1.0) ** l)
    value = 3.0 * float(sigma(l, 0)) + 2.0 * math.fsum(parts)
    return DiskSum(l, value, cutoff, tail)


def disk_second_power_closed_form() -> float:
    """The l = 2 disk sum in closed form, 3/32 + (pi^2/6 - 3/2)/8.

    From the partial fractions 1/((nu+1)^2 (nu+2)) =
    1/(nu+1)^2 - 1/(nu+1) + 1/(nu+2): the last two pieces telescope to -1/2
    and the first sums to pi^2/6 - 5/4, so
    sum_{nu>=1} sigma_4(nu) = (pi^2/6 - 3/2)/16.
    """
    return 3.0 / 32.0 + (math.pi**2 / 6.0 - 1.5) / 8.0


def _bessel_pair(nu: int, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(J_nu(z), J_{nu+1}(z)) elementwise for z > 0, integer nu >= 0."""
    z = np.asarray(z, dtype=np.float64)
    ja = np.empty_like(z)
    jb = np.empty_like(z)

    small = z < _SERIES_CUTOFF
    if np.any(small):
        zs = z[small]
        idx = np.where(small)[0]
        for slot, order in ((ja, nu), (jb, nu + 1)):
            half = zs / 2.0
            term = half**order / math.factorial(order)
            acc = term.copy()
            for k in range(1, _SERIES_TERMS):
                term = -term * half * half / (k * (k + order))
                acc = acc + term
            slot[idx] = acc

    big = ~small
    if np.any(big):
        zb = z[big]
        idx = np.where(big)[0]
        zmax = float(np.max(zb))
        start = max(int(zmax + 16.0 * zmax ** (1.0 / 3.0) + 30.0), nu + 25)
        jnext = np.zeros_like(zb)  # J_{k+1}
        jcur = np.full_like(zb, 1e-30)  # J_k, arbitrary seed at k = start
        norm = np.zeros_like(zb)  # accumulates J_0 + 2 sum J_{2k}
        va = np.zeros_like(zb)
        vb = np.zeros_like(zb)
        for k in range(start, 0, -1):
            jprev = (2.0 * k) / zb * jcur - jnext
            jnext = jcur
            jcur = jprev
            if k - 1 == nu:
                va = jcur.copy()
                vb = jnext.copy()
            if (k - 1) % 2 == 0 and k - 1 > 0:
                norm = norm + 2.0 * jcur
            over = np.abs(jcur) > _RESCALE
            if np.any(over):
                scale = np.where(over, 1.0 / _RESCALE, 1.0)
                jcur = jcur * scale
                jnext = jnext * scale
                norm = norm * scale
                va = va * scale
                vb = vb * scale
        norm = norm + jcur
        ja[idx] = va / norm
        jb[idx] = vb / norm
    return ja, jb


def _bessel_value_and_derivative(nu: int, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a, b = _bessel_pair(nu, z)
    return a, (nu / z) * a - b  # J_nu' = (nu/z) J_nu - J_{nu+1}


_zero_cache: dict[int, np.ndarray] = {}


def _zeros_up_to(nu: int, count: int) -> np.ndarray:
    """First ``count`` zeros of J_nu, bracketed by interlacing and polished."""
    cached = _zero_cache.get(nu)
    if cached is not None and len(cached) >= count:
        return cached[:count]

    if nu == 0:
        n = np.arange(1, count + 1, dtype=np.float64)
        lo = (n - 1.0) * math.pi + 1e-9  # exclude the origin for n = 1
        hi = n * math.pi
    else:
        upstream = _zeros_up_to(nu - 1, count + 1)
        lo = upstream[:-1].copy()
        hi = upstream[1:].copy()

    flo, _ = _bessel_value_and_derivative(nu, lo)
    # 12 bisection sweeps cut the bracket below 1e-3, then Newton takes over.
    for _ in range(12):
        mid = 0.5 * (lo + hi)
        fmid, _ = _bessel_value_and_derivative(nu, mid)
        same = flo * fmid > 0.0
        lo = np.where(same, mid, lo)
        flo = np.where(same, fmid, flo)
        hi = np.where(same, hi, mid)
    z = 0.5 * (lo + hi)
    for _ in range(6):
        f, fp = _bessel_value_and_derivative(nu, z)
        z = np.clip(z - f / fp, lo, hi)

    # Certify the batch: the Newton correction estimates the remaining error.
    f, fp = _bessel_value_and_derivative(nu, z)
    if float(np.max(np.abs(f / fp) / z)) > ZERO_REL_TOL:
        raise RuntimeError(f"zero batch for nu={nu} missed the accuracy target")

    _zero_cache[nu] = z
    return z[:count]


def bessel_zero(nu: int, n: int, tol: float = 1e-12) -> float:
    """j_{nu,n}, the n-th positive zero of J_nu (oracle scale only)."""
    if not 0 <= nu <= MAX_ORDER:
        raise ValueError(f"nu must lie in [0, {MAX_ORDER}]")
    if not 1 <= n <= MAX_INDEX:
        raise ValueError(f"n must lie in [1, {MAX_INDEX}]")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    value = float(_zeros_up_to(nu, n)[n - 1])
    f, fp = _bessel_value_and_derivative(nu, np.array([value]))
    if abs(float(f[0]) / float(fp[0])) > tol * max(1.0, value):
        raise RuntimeError(f"zero j_({nu},{n}) did not meet tolerance {tol:g}")
    return value


def bessel_zero_tail_bound(nu: int, l: int, N: int) -> float:
    """Certified bound on sum_{n>N} j_{nu,n}^(-2l).

    Interlacing pushes zeros up with the order, so j_{nu,n} >= j_{0,n}, and
    j_{0,n} > (n-1) pi because the zeros of J_0 interlace with the zeros
    n pi of the half-order function.  Integral comparison finishes it.
    """
    if nu < 0 or l < 1 or N < 2:
        raise ValueError("need nu >= 0, l >= 1, N >= 2")
    return (N - 1.0) ** (1 - 2 * l) / ((2 * l - 1) * math.pi ** (2 * l))


def bessel_zero_partial_sum(nu: int, l: int, N: int) -> float:
    """Truncated sum_{n<=N} j_{nu,n}^(-2l) from computed zeros."""
    if not 0 <= nu <= MAX_ORDER:
        raise ValueError(f"nu must lie in [0, {MAX_ORDER}]")
    if not 1 <= N <= MAX_INDEX:
        raise ValueError(f"N must lie in [1, {MAX_INDEX}]")
    zeros = _zeros_up_to(nu, N)
    return math.fsum((zeros ** float(-2 * l)).tolist())


def bessel_sum_float_envelope(l: int, partial: float) -> float:
    """Float64 error allowance for a computed partial sum.

    Each zero is certified to ZERO_REL_TOL relative accuracy, so a term
    j^(-2l) is off by at most ~2l times that; fsum adds one rounding.  Needed
    when comparing against exact sigma values at high l, where the analytic
    truncation tail drops below float64 resolution.
    """
    return (2 * l * ZERO_REL_TOL + 4.0 * math.ulp(1.0)) * partial
