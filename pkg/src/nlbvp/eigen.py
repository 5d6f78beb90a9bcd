"""Eigenvalues and eigenfunctions of the coupled-boundary Laplacian.

The problem on the unit interval is

    -phi'' = lambda phi,   phi(0) + phi(1) = -phi'(0) = phi'(1),

whose eigenfunctions coincide with those of the integral operator with
kernel -|x-y|/2.  The spectrum splits into three families:

* n = 0: the unique negative eigenvalue lambda_0 = -(2 alpha)^2 where
  alpha = coth alpha, with eigenfunction C0 cosh(2 alpha (x - 1/2));
* n = 2m-1: lambda = ((2m-1) pi)^2 with eigenfunction
  sqrt(2) cos((2m-1) pi x);
* n = 2m: lambda = (2 x_m)^2 where x_m is the m-th root of cot x = -x,
  with eigenfunction C_{2m} cos(2 x_m (x - 1/2)).

Indexing by n is already ascending in value: (2 x_m)^2 sits strictly
between ((2m-1)pi)^2 and ((2m)pi)^2 because (m-1/2)pi < x_m < m pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from nlbvp.roots import solve_cot_root, solve_coth_fixed_point


class Family(Enum):
    NEGATIVE = "negative"
    ODD_COSINE = "odd_cosine"
    SECULAR_EVEN = "secular_even"


@dataclass(frozen=True)
class EigenvalueEntry:
    index: int
    family: Family
    value: float


@lru_cache(maxsize=1)
def coth_alpha() -> float:
    """The fixed point alpha = coth alpha, polished to machine precision."""
    return solve_coth_fixed_point(1e-14).value


@lru_cache(maxsize=None)
def _even_root(m: int) -> float:
    return solve_cot_root(m, 1e-12).value


def _family(n: int) -> Family:
    if n == 0:
        return Family.NEGATIVE
    return Family.ODD_COSINE if n % 2 == 1 else Family.SECULAR_EVEN


def eigenvalue(n: int) -> float:
    """The n-th eigenvalue (ascending order, n >= 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        a = coth_alpha()
        return -4.0 * a * a
    if n % 2 == 1:
        return (n * math.pi) ** 2  # n = 2m-1 odd, lambda = ((2m-1) pi)^2
    x = _even_root(n // 2)
    return 4.0 * x * x


def spectrum(count: int) -> list[EigenvalueEntry]:
    """The first ``count`` eigenvalues, ascending, with family tags."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [EigenvalueEntry(n, _family(n), eigenvalue(n)) for n in range(count)]


def normalization(n: int) -> float:
    """Constant making the n-th eigenfunction unit-norm in L2(0,1).

    C0 = sqrt(2) (1 + sinh(2 alpha)/(2 alpha))^(-1/2) for n = 0, sqrt(2) for
    odd cosine modes, and C = sqrt(2) (1 + sin(2 x_m)/(2 x_m))^(-1/2) for the
    even secular modes.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        s = 2.0 * coth_alpha()  # sqrt(-lambda_0)
        return math.sqrt(2.0) / math.sqrt(1.0 + math.sinh(s) / s)
    if n % 2 == 1:
        return math.sqrt(2.0)
    s = 2.0 * _even_root(n // 2)  # sqrt(lambda_n)
    return math.sqrt(2.0) / math.sqrt(1.0 + math.sin(s) / s)


def eigenfunction_eval(n: int, x: float) -> float:
    """Value of the normalized n-th eigenfunction at x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if n == 0:
        a = coth_alpha()
        return normalization(0) * math.cosh(2.0 * a * (x - 0.5))
    if n % 2 == 1:
        return math.sqrt(2.0) * math.cos(n * math.pi * x)
    xm = _even_root(n // 2)
    return normalization(n) * math.cos(2.0 * xm * (x - 0.5))


def eigenfunction_derivative(n: int, x: float) -> float:
    """Closed-form derivative of the normalized n-th eigenfunction."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if n == 0:
        a = coth_alpha()
        return normalization(0) * 2.0 * a * math.sinh(2.0 * a * (x - 0.5))
    if n % 2 == 1:
        return -math.sqrt(2.0) * n * math.pi * math.sin(n * math.pi * x)
    xm = _even_root(n // 2)
    return -normalization(n) * 2.0 * xm * math.sin(2.0 * xm * (x - 0.5))


def boundary_residual(n: int, alpha_override: float | None = None) -> tuple[float, float]:
    """How far the n-th eigenfunction is from the coupled boundary condition.

    Returns (|phi(0) + phi(1) + phi'(0)|, |phi'(1) + phi'(0)|); both vanish
    exactly when the secular identities hold, so the residuals measure the
    quality of the computed secular roots.

    ``alpha_override`` is a validation hook: it replaces the secular constant
    in the n = 0 case so that calibration checks can confirm the residuals
    actually respond to a perturbed root.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0 and alpha_override is not None:
        a = alpha_override
        s = 2.0 * a
        c0 = math.sqrt(2.0) / math.sqrt(1.0 + math.sinh(s) / s)
        phi0 = phi1 = c0 * math.cosh(a)
        dphi0 = -c0 * 2.0 * a * math.sinh(a)
        dphi1 = c0 * 2.0 * a * math.sinh(a)
    else:
        phi0 = eigenfunction_eval(n, 0.0)
        phi1 = eigenfunction_eval(n, 1.0)
        dphi0 = eigenfunction_derivative(n, 0.0)
        dphi1 = eigenfunction_derivative(n, 1.0)
    return abs(phi0 + phi1 + dphi0), abs(dphi1 + dphi0)


@lru_cache(maxsize=1)
def _gauss_legendre_16() -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(16)
    return nodes, weights


def normalization_check(n: int, panels: int = 16) -> float:
    """Quadrature estimate of the squared L2 norm of the n-th eigenfunction.

    Composite 16-point Gauss-Legendre over ``panels`` equal panels; the
    integrands are entire, so the rule is spectrally accurate and the result
    should equal 1 to near machine precision.
    """
    if panels < 16:
        raise ValueError("panels must be >= 16")
    nodes, weights = _gauss_legendre_16()
    h = 1.0 / panels
    total = 0.0
    for i in range(panels):
        mid = (i + 0.5) * h
        xs = mid + 0.5 * h * nodes
        fs = np.array([eigenfunction_eval(n, float(x)) for x in xs])
        total += 0.5 * h * float(np.dot(weights, fs * fs))
    return total
