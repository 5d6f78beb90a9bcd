"""Sandwich bounds for the negative eigenvalue from the exact power sums.

Because lambda_0 is the unique negative eigenvalue and dominates the power
sums ((-1)^p A_p > 0 from p = 2 on), the exact table yields two families of
strict, improvable bounds:

    root bounds:   -|A_{2m-1}|^(-1/(2m-1)) < lambda_0 < -A_{2m}^(-1/(2m))
    ratio bounds:   A_{2m}/A_{2m+1} < lambda_0 < A_{2m-1}/A_{2m}

Ratio bounds are exact rationals.  Root bounds need real p-th roots, which
are extracted with 50-digit decimal arithmetic before rounding to float so
the sandwich assertions cannot fail from roundoff.  The m = 1 lower root
bound is degenerate because A_1 = 0; it is reported as -inf with a flag
rather than an error, since the containment statement stays vacuously true.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction

from nlbvp.rayleigh import RayleighTable

_ROOT_DIGITS = 50


class BoundScheme(Enum):
    ROOT = "root"
    RATIO = "ratio"


@dataclass(frozen=True)
class BoundPair:
    """An open interval (lower, upper) certified to contain lambda_0."""

    m: int
    lower: float
    upper: float
    scheme: BoundScheme
    degenerate_lower: bool = False


class ToleranceNotReached(RuntimeError):
    """Requested interval width was not achieved; carries the last interval."""

    def __init__(self, message: str, interval: BoundPair):
        super().__init__(message)
        self.interval = interval


def _neg_recip_root(value: Fraction, k: int) -> float:
    """-(value)^(-1/k) for positive rational value, via 50-digit decimals."""
    if value <= 0:
        raise ValueError("value must be positive")
    with localcontext() as ctx:
        ctx.prec = _ROOT_DIGITS
        base = Decimal(value.denominator) / Decimal(value.numerator)
        return float(-(base ** (Decimal(1) / Decimal(k))))


def bound_root_pair(m: int, table: RayleighTable) -> BoundPair:
    """The m-th root-bound interval; needs A_1..A_{2m}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(table) < 2 * m:
        raise ValueError(f"table holds A_1..A_{len(table)}; root bounds at m={m} need A_{2 * m}")
    a_odd = table.a(2 * m - 1)
    a_even = table.a(2 * m)
    if a_even <= 0:
        raise ValueError(f"A_{2 * m} must be positive for the upper root bound")
    upper = _neg_recip_root(a_even, 2 * m)
    if a_odd == 0:
        return BoundPair(m, -math.inf, upper, BoundScheme.ROOT, degenerate_lower=True)
    lower = _neg_recip_root(abs(a_odd), 2 * m - 1)
    return BoundPair(m, lower, upper, BoundScheme.ROOT)


def _ratio_interval(m: int, table: RayleighTable) -> tuple[Fraction, Fraction]:
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(table) < 2 * m + 1:
        raise ValueError(f"table holds A_1..A_{len(table)}; ratio bounds at m={m} need A_{2 * m + 1}")
    if table.a(2 * m) == 0 or table.a(2 * m + 1) == 0:
        raise ValueError("zero denominator in ratio bounds (A_p vanishes only at p = 1)")
    lower = table.a(2 * m) / table.a(2 * m + 1)
    upper = table.a(2 * m - 1) / table.a(2 * m)
    return lower, upper


def bound_ratio_pair(m: int, table: RayleighTable) -> BoundPair:
    """The m-th ratio-bound interval; needs A_1..A_{2m+1}."""
    lower, upper = _ratio_interval(m, table)
    return BoundPair(m, float(lower), float(upper), BoundScheme.RATIO)


def converge_lambda0(tol: float, mmax: int, table: RayleighTable) -> tuple[float, BoundPair]:
    """Smallest m <= mmax whose ratio interval has width <= tol.

    Returns (midpoint, interval).  Widths are compared in exact rational
    arithmetic.  Raises ToleranceNotReached (carrying the last interval) when
    no interval is narrow enough.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if mmax < 1:
        raise ValueError("mmax must be >= 1")
    last: BoundPair | None = None
    for m in range(1, mmax + 1):
        lower, upper = _ratio_interval(m, table)
        last = BoundPair(m, float(lower), float(upper), BoundScheme.RATIO)
        if upper - lower <= Fraction(str(tol)):
            midpoint = float((lower + upper) / 2)
            return midpoint, last
    assert last is not None
    raise ToleranceNotReached(
        f"ratio interval width {last.upper - last.lower:.3e} at m={last.m} exceeds tol={tol:g}",
        last,
    )
