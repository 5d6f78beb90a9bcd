"""Exact reciprocal power sums A_p = sum_{n>=0} lambda_n^(-p).

The eigenvalues are the squared zeros (up to sign) of the entire function

    f(x) = (1 + cos x)/2 + (x/4) sin x,

which factors over the spectrum as prod_n (1 - x^2 / lambda_n).  Three
independent exact pipelines compute A_p as rationals:

* ``power_sums_recursion``: the convolution recursion obtained from the
  logarithmic derivative of the product form,

      4 A_{n+1} + sum_{k=1}^{n-1} (-1)^k (2/(2k)! - 1/(2k-1)!) A_{n-k+1}
          = (-1)^{n+1} n / (2n+1)!,    A_1 = 0,

  where an empty sum (n = 1) counts as zero;

* ``power_sums_bernoulli``: splitting the spectrum into its three families.
  The odd cosine modes sum via the Bernoulli closed form of the even zeta
  values; the remaining hyperbolic-plus-secular combination

      T_{2l} = S_{2l} + (-1)^l / alpha^(2l),
      S_{2p} = sum_m x_m^(-2p)   (x_m the roots of cot x = -x)

  satisfies a rational triangular recursion (no alpha appears), and

      A_p = T_{2p} / 4^p + (4^p - 1) |B_{2p}| / (2 (2p)!);

* ``power_sums_newton``: Newton identities applied to the Maclaurin
  coefficients of f, a_k = (-1)^k (1/(2 (2k)!) - 1/(4 (2k-1)!)).

All three agree exactly; the suite enforces rational equality.  The first
values are A_1 = 0, A_2 = 1/24, A_3 = -1/240, A_4 = 41/40320,
A_5 = -107/725760.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

NEWTON_CAP = 12  # the identities blow up quadratically; this route is a validator


class Method(Enum):
    RECURSION = "recursion"
    BERNOULLI = "bernoulli"
    NEWTON = "newton"


@dataclass(frozen=True)
class RayleighTable:
    """Exact values A_1..A_P with the pipeline that produced them."""

    values: tuple[Fraction, ...]
    method: Method

    def __len__(self) -> int:
        return len(self.values)

    def a(self, p: int) -> Fraction:
        """A_p, 1-based."""
        if not 1 <= p <= len(self.values):
            raise ValueError(f"table holds A_1..A_{len(self.values)}; got p={p}")
        return self.values[p - 1]


def bernoulli(nmax: int) -> list[Fraction]:
    """Bernoulli numbers B_0..B_nmax (B_1 = -1/2 convention).

    Standard convolution recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 for
    n >= 1, solved for B_n.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    values = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += math.comb(n + 1, k) * values[k]
        values.append(-acc / (n + 1))
    return values


def zeta_even(p: int) -> Fraction:
    """The rational c_p with sum_{m>=1} m^(-2p) = c_p pi^(2p).

    Euler's closed form: c_p = 2^(2p-1) |B_{2p}| / (2p)!.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    b = bernoulli(2 * p)[2 * p]
    return Fraction(2 ** (2 * p - 1)) * abs(b) / math.factorial(2 * p)


@lru_cache(maxsize=None)
def _recursion_values(P: int) -> tuple[Fraction, ...]:
    a = [Fraction(0)]  # A_1
    for n in range(1, P):
        acc = Fraction(0)
        for k in range(1, n):  # empty for n = 1
            coeff = Fraction(2, math.factorial(2 * k)) - Fraction(1, math.factorial(2 * k - 1))
            acc += (-1) ** k * coeff * a[n - k]
        rhs = Fraction((-1) ** (n + 1) * n, math.factorial(2 * n + 1))
        a.append((rhs - acc) / 4)
    return tuple(a)


def power_sums_recursion(P: int) -> RayleighTable:
    """A_1..A_P from the logarithmic-derivative convolution recursion."""
    if P < 1:
        raise ValueError("P must be >= 1")
    return RayleighTable(_recursion_values(P), Method.RECURSION)


def t_sequence(P: int) -> tuple[Fraction, ...]:
    """T_2..T_{2P} with T_{2l} = S_{2l} + (-1)^l alpha^(-2l), all rational.

    Triangular system: for n = 0, 1, ...,

        sum_{l=1}^{n+1} (-1)^(n-l+1) (2(n-l+1) - 1) / (2(n-l+1))! * T_{2l}
            = (-1)^n / (2 (2n)!).

    The l = n+1 coefficient is -1, so each step solves directly for the next
    T; the n = 0 instance forces T_2 = -1/2.
    """
    if P < 1:
        raise ValueError("P must be >= 1")
    t: list[Fraction] = []
    for n in range(P):
        acc = Fraction(0)
        for l in range(1, n + 1):
            j = n - l + 1
            acc += Fraction((-1) ** j * (2 * j - 1), math.factorial(2 * j)) * t[l - 1]
        rhs = Fraction((-1) ** n, 2 * math.factorial(2 * n))
        t.append(acc - rhs)
    return tuple(t)


def power_sums_bernoulli(P: int) -> RayleighTable:
    """A_1..A_P via the family split A_p = T_{2p}/4^p + (4^p-1)|B_{2p}|/(2 (2p)!)."""
    if P < 1:
        raise ValueError("P must be >= 1")
    t = t_sequence(P)
    b = bernoulli(2 * P)
    values = []
    for p in range(1, P + 1):
        even_part = t[p - 1] / Fraction(4**p)
        odd_part = Fraction(4**p - 1, 2 * math.factorial(2 * p)) * abs(b[2 * p])
        values.append(even_part + odd_part)
    return RayleighTable(tuple(values), Method.BERNOULLI)


def maclaurin_coeffs(K: int) -> tuple[Fraction, ...]:
    """Coefficients a_0..a_K of (1 + cos x)/2 + (x/4) sin x in powers of x^2.

    a_0 = 1 and a_k = (-1)^k (1/(2 (2k)!) - 1/(4 (2k-1)!)) for k >= 1; in
    particular a_1 = 0, which is the p = 1 trace identity in disguise.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    out = [Fraction(1)]
    for k in range(1, K + 1):
        term = Fraction(1, 2 * math.factorial(2 * k)) - Fraction(1, 4 * math.factorial(2 * k - 1))
        out.append((-1) ** k * term)
    return tuple(out)


def power_sums_newton(P: int) -> RayleighTable:
    """A_1..A_P by Newton identities on the Maclaurin coefficients.

    In the variable u = x^2 the product form has elementary symmetric
    functions e_k = (-1)^k a_k of the reciprocals 1/lambda_n, and the power
    sums follow from p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^(k-1) k e_k.
    Capped at P <= NEWTON_CAP; this pipeline exists to validate the others.
    """
    if P < 1:
        raise ValueError("P must be >= 1")
    if P > NEWTON_CAP:
        raise ValueError(f"Newton pipeline is capped at P <= {NEWTON_CAP}; got {P}")
    a = maclaurin_coeffs(P)
    e = [(-1) ** k * a[k] for k in range(P + 1)]
    p: list[Fraction] = [Fraction(0)] * (P + 1)
    for k in range(1, P + 1):
        acc = Fraction((-1) ** (k - 1) * k) * e[k]
        for i in range(1, k):
            acc += (-1) ** (i - 1) * e[i] * p[k - i]
        p[k] = acc
    return RayleighTable(tuple(p[1:]), Method.NEWTON)


def s_values(P: int, alpha: float) -> list[float]:
    """Floating S_{2p} = sum_m x_m^(-2p) for p = 1..P, via S = T - (-1)^p alpha^(-2p)."""
    if P < 1:
        raise ValueError("P must be >= 1")
    if alpha <= 1.0:
        raise ValueError("alpha must exceed 1")
    t = t_sequence(P)
    return [float(t[p - 1]) - (-1.0) ** p / alpha ** (2 * p) for p in range(1, P + 1)]
