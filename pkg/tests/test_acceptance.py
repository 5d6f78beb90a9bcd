"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
PASS lines; any assertion failure marks the corresponding criterion FAIL.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import pytest

from nlbvp import _kernels, bounds, disk, eigen, oracles, rayleigh


def report(name: str, detail: str) -> None:
    print(f"PASS {name}: {detail}")


def test_criterion_01_exact_low_order_values():
    start = time.perf_counter()
    table = rayleigh.power_sums_recursion(5)
    expected = (
        Fraction(0),
        Fraction(1, 24),
        Fraction(-1, 240),
        Fraction(41, 40320),
        Fraction(-107, 725760),
    )
    elapsed = time.perf_counter() - start
    assert table.values == expected
    assert elapsed < 1.0
    report("criterion 01 exact values", f"A_1..A_5 exact, {elapsed:.3f}s")


def test_criterion_02_triple_method_agreement():
    start = time.perf_counter()
    t_rec = rayleigh.power_sums_recursion(12)
    t_ber = rayleigh.power_sums_bernoulli(12)
    t_new = rayleigh.power_sums_newton(12)
    elapsed = time.perf_counter() - start
    assert t_rec.values == t_ber.values == t_new.values
    assert elapsed < 5.0
    report("criterion 02 triple agreement", f"rational equality to p=12, {elapsed:.3f}s")


def test_criterion_03_trace_identities(nystrom_study):
    for n in (16, 128, 512, 1024, 4096):
        assert oracles.nystrom_trace_power(n, 1).value == 0.0
    err2 = nystrom_study[(4096, 2)].abs_err
    err3 = nystrom_study[(4096, 3)].abs_err
    assert err2 <= 1e-4
    assert err3 <= 1e-4
    assert nystrom_study["elapsed_4096"] < 60.0
    report(
        "criterion 03 trace identity",
        f"p=1 exactly 0; N=4096 errors {err2:.2e}/{err3:.2e} in {nystrom_study['elapsed_4096']:.1f}s",
    )


def test_criterion_04_direct_sum_oracle():
    start = time.perf_counter()
    r2 = oracles.direct_sum(2, 10**6)
    r3 = oracles.direct_sum(3, 10**4)
    elapsed = time.perf_counter() - start
    assert r2.abs_err <= r2.tail_bound
    assert r2.tail_bound <= 2e-7
    assert r3.abs_err <= 1e-9
    assert elapsed < 30.0
    report(
        "criterion 04 direct sums",
        f"p=2 err {r2.abs_err:.1e} <= bound {r2.tail_bound:.1e}; p=3 err {r3.abs_err:.1e}; {elapsed:.2f}s",
    )


def test_criterion_05_secular_constants():
    start = time.perf_counter()
    a = eigen.coth_alpha()
    lam0 = eigen.eigenvalue(0)
    c0 = eigen.normalization(0)
    elapsed = time.perf_counter() - start
    assert abs(a - 1.19967864) < 5e-9  # 8 decimals
    assert abs(lam0 - -5.756915) < 5e-7  # 6 decimals
    assert abs(c0 - 0.7812598) < 5e-8  # 7 decimals
    assert elapsed < 1.0
    report("criterion 05 secular constants", f"alpha={a:.9f} lambda0={lam0:.7f} C0={c0:.8f}")


def test_criterion_06_boundary_and_normalization():
    worst_res = 0.0
    worst_norm = 0.0
    for n in range(51):
        r1, r2 = eigen.boundary_residual(n)
        worst_res = max(worst_res, r1, r2)
        worst_norm = max(worst_norm, abs(eigen.normalization_check(n, panels=32) - 1.0))
    assert worst_res < 1e-9
    assert worst_norm <= 1e-9
    report("criterion 06 boundary conditions", f"max residual {worst_res:.1e}, max |norm-1| {worst_norm:.1e}")


def test_criterion_07_partial_sum_identities():
    m_terms = 10**6
    odd = oracles.odd_mode_power_sum(1, m_terms)
    assert abs(odd - 0.125) <= 2e-7
    a = eigen.coth_alpha()
    even = _kernels.cot_root_power_sum(m_terms, 2)
    assert abs(even - (1.0 / (a * a) - 0.5)) <= 2e-6
    report(
        "criterion 07 partial sums",
        f"odd->1/8 err {abs(odd - 0.125):.1e}; even->1/a^2-1/2 err {abs(even - (1 / a**2 - 0.5)):.1e}",
    )


def test_criterion_08_euler_rayleigh_bounds(exact_table_40):
    a = eigen.coth_alpha()
    lam0 = -4.0 * a * a
    prev = None
    for m in range(1, 11):
        root_pair = bounds.bound_root_pair(m, exact_table_40)
        ratio_pair = bounds.bound_ratio_pair(m, exact_table_40)
        assert root_pair.lower < lam0 < root_pair.upper
        assert ratio_pair.lower < lam0 < ratio_pair.upper
        if prev is not None:
            assert ratio_pair.lower >= prev.lower
            assert ratio_pair.upper <= prev.upper
        prev = ratio_pair
    estimate, interval = bounds.converge_lambda0(1e-3, 19, exact_table_40)
    assert abs(estimate - lam0) <= 1e-3
    report(
        "criterion 08 eigenvalue bounds",
        f"all m<=10 sandwiches strict; converge at m={interval.m}, estimate {estimate:.6f}",
    )


def test_criterion_09_reference_sums():
    r1 = oracles.tan_reference_sum(1, 10**6)
    r2 = oracles.tan_reference_sum(2, 10**3)
    assert r1.abs_err <= 2e-7
    assert r2.abs_err <= 1e-9
    report("criterion 09 reference sums", f"1/10 err {r1.abs_err:.1e}; 1/350 err {r2.abs_err:.1e}")


def test_criterion_10_disk_case():
    assert disk.sigma(1, 0) == Fraction(1, 4)
    for nu in range(21):
        assert disk.sigma(2, nu) == Fraction(1, 16 * (nu + 1) ** 2 * (nu + 2))
    result = disk.disk_power_sum(2, tol=1e-11)
    closed = 3.0 / 32.0 + (math.pi**2 / 6.0 - 1.5) / 8.0
    assert abs(result.value - closed) <= 1e-10
    with pytest.raises(disk.DivergentSumError):
        disk.disk_power_sum(1)
    n_terms = 500
    partial = disk.bessel_zero_partial_sum(0, 2, n_terms)
    tail = disk.bessel_zero_tail_bound(0, 2, n_terms)
    assert abs(partial - float(disk.sigma(2, 0))) <= tail
    report(
        "criterion 10 disk case",
        f"sigma forms exact; |disk(2)-closed| {abs(result.value - closed):.1e}; bessel tail {tail:.1e}",
    )


def test_criterion_11_iterated_kernel_guard():
    integral = oracles.iterated_kernel_diag2_integral()
    assert integral == Fraction(1, 24)
    assert abs(float(integral) - 1.0 / 24.0) < 1e-12
    c0, c1, c2 = oracles.iterated_kernel_diag2_coeffs()
    assert (c0, c1, c2) == (Fraction(1, 12), Fraction(-1, 4), Fraction(1, 4))
    # The plausible misprint (constant term 1/2) integrates to 11/24, which
    # the exact A_2 = 1/24 rules out; keep that contradiction on record.
    assert Fraction(1, 2) + c1 / 2 + c2 / 3 == Fraction(11, 24)
    assert Fraction(11, 24) != rayleigh.power_sums_recursion(2).a(2)
    report(
        "criterion 11 kernel diagonal guard",
        "exact integral 1/24; constant term 1/2 would give 11/24 and is rejected",
    )
