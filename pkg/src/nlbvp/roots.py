"""Certified root finding for the secular equations of the spectrum.

Three transcendental families appear:

* ``coth y = y``: a single root alpha = 1.19967864... in (1, 2), tied to the
  unique negative eigenvalue via lambda_0 = -(2 alpha)^2;
* ``cot x = -x``: the m-th positive root x_m lies in ((m-1/2)pi, m pi) and
  gives the even-index eigenvalues lambda_{2m} = (2 x_m)^2;
* ``tan x = x``: the classical reference family whose reciprocal even power
  sums are 1/10 and 1/350; the k-th positive root lies in (k pi, (k+1/2)pi).

Each solve starts from an analytically guaranteed sign-change bracket,
bisects to a coarse width and then polishes with Newton steps that fall back
to bisection whenever they would leave the bracket, so convergence is
unconditional.  Newton runs on pole-free forms (cos x + x sin x for the cot
family, sin x - x cos x for the tan family); the reported residual is the
value of the defining equation itself.

The ``tol`` argument is a residual target.  For the oscillatory families the
defining residual at the best float64 root grows like x^3 * eps (the
derivative of cot x + x at the root is -(1 + x_m^2)), so for large indices
the solver stops at the float64 floor instead; the root is then accurate to
machine precision even though the raw residual exceeds ``tol``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

_POLE_GAP = 1e-9  # offset keeping brackets clear of the secular poles
_BISECT_WIDTH = 1e-3  # hand off from bisection to Newton at this width
_MAX_ITER = 200


class ConvergenceError(RuntimeError):
    """Root iteration failed; carries the last bracket for diagnostics."""

    def __init__(self, message: str, bracket: tuple[float, float]):
        super().__init__(f"{message} (last bracket {bracket!r})")
        self.bracket = bracket


class SecularEquation(Enum):
    COTH_FIXED_POINT = "coth_fixed_point"  # y = coth y
    COT_NEG_X = "cot_neg_x"  # cot x = -x
    TAN_EQ_X = "tan_eq_x"  # tan x = x


@dataclass(frozen=True)
class RootResult:
    """A bracketed, polished root with its defining-equation residual."""

    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int


def _refine(g, gprime, lo: float, hi: float, step_tol: float) -> tuple[float, int]:
    """Bisection then bracket-guarded Newton on the pole-free form g.

    Requires a sign change of g on [lo, hi].  Returns (root, iterations).
    """
    glo = g(lo)
    ghi = g(hi)
    if glo == 0.0:
        return lo, 0
    if ghi == 0.0:
        return hi, 0
    if glo * ghi > 0.0:
        # Cannot happen for the analytic brackets below; guarded anyway.
        raise ConvergenceError("bracket does not straddle a sign change", (lo, hi))

    iterations = 0
    while hi - lo > _BISECT_WIDTH:
        iterations += 1
        if iterations > _MAX_ITER:
            raise ConvergenceError("bisection failed to narrow the bracket", (lo, hi))
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid, iterations
        if glo * gm < 0.0:
            hi, ghi = mid, gm
        else:
            lo, glo = mid, gm

    x = 0.5 * (lo + hi)
    floor = 4.0 * math.ulp(max(1.0, abs(x)))
    target = max(step_tol, floor)
    for _ in range(_MAX_ITER - iterations):
        iterations += 1
        gx = g(x)
        if gx == 0.0:
            return x, iterations
        # Keep the bracket in sync so a wild Newton step can be rejected.
        if glo * gx < 0.0:
            hi = x
        else:
            lo = x
        step = gx / gprime(x)
        x_new = x - step
        if abs(step) <= target:
            # Converged; take the final correction when it stays bracketed.
            return (x_new if lo < x_new < hi else x), iterations
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
            if not lo < x_new < hi:
                return x, iterations  # bracket collapsed to adjacent floats
        x = x_new
    raise ConvergenceError("Newton polish did not converge", (lo, hi))


def solve_coth_fixed_point(tol: float = 1e-12) -> RootResult:
    """The unique root alpha > 1 of coth y = y.

    coth y - y is positive just above 1 and negative at 2, so (1 + delta, 2)
    brackets the root.  The residual |coth(alpha) - alpha| reaches the
    requested tolerance directly (the equation is well conditioned there).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    def f(y: float) -> float:
        return 1.0 / math.tanh(y) - y

    def fprime(y: float) -> float:
        c = 1.0 / math.tanh(y)
        return -c * c  # d/dy coth y = 1 - coth^2 y

    lo, hi = 1.0 + _POLE_GAP, 2.0
    # |f'| > alpha^2 - 1 ~ 0.44 near the root, so a step target of tol
    # delivers a residual of the same order.
    value, iterations = _refine(f, fprime, lo, hi, tol)
    return RootResult(value, (lo, hi), abs(f(value)), iterations)


def solve_cot_root(m: int, tol: float = 1e-12) -> RootResult:
    """The m-th positive root of cot x = -x, bracketed in ((m-1/2)pi, m pi).

    Newton runs on g(x) = cos x + x sin x, which equals (cot x + x) sin x and
    has the same (simple) roots inside the bracket because sin x keeps one
    sign there; g'(x) = x cos x.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    lo = (m - 0.5) * math.pi
    hi = m * math.pi

    def g(x: float) -> float:
        return math.cos(x) + x * math.sin(x)

    def gprime(x: float) -> float:
        return x * math.cos(x)

    # |d/dx (cot x + x)| = 1 + x^2 at the root; aim the step accordingly.
    step_tol = tol / (1.0 + hi * hi)
    value, iterations = _refine(g, gprime, lo, hi, step_tol)
    residual = abs(1.0 / math.tan(value) + value)
    return RootResult(value, (lo, hi), residual, iterations)


def solve_tan_root(k: int, tol: float = 1e-12) -> RootResult:
    """The k-th strictly positive root of tan x = x in (k pi, (k+1/2)pi).

    Newton runs on h(x) = sin x - x cos x with h'(x) = x sin x; the bracket
    ends are pulled in by a tiny offset to stay clear of the tan pole when
    the residual is evaluated.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    lo = k * math.pi + _POLE_GAP
    hi = (k + 0.5) * math.pi - _POLE_GAP

    def h(x: float) -> float:
        return math.sin(x) - x * math.cos(x)

    def hprime(x: float) -> float:
        return x * math.sin(x)

    step_tol = tol / (1.0 + hi * hi)  # |d/dx (tan x - x)| = tan^2 x = x^2 at the root
    value, iterations = _refine(h, hprime, lo, hi, step_tol)
    residual = abs(math.tan(value) - value)
    return RootResult(value, (lo, hi), residual, iterations)


def enumerate_roots(eq: SecularEquation, count: int, tol: float = 1e-12) -> list[RootResult]:
    """First ``count`` roots of ``eq`` in increasing order (deterministic)."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if eq is SecularEquation.COTH_FIXED_POINT:
        if count == 0:
            return []
        if count > 1:
            raise ValueError("coth y = y has a single positive root")
        return [solve_coth_fixed_point(tol)]
    if eq is SecularEquation.COT_NEG_X:
        return [solve_cot_root(m, tol) for m in range(1, count + 1)]
    if eq is SecularEquation.TAN_EQ_X:
        return [solve_tan_root(k, tol) for k in range(1, count + 1)]
    raise ValueError(f"unknown secular equation {eq!r}")
