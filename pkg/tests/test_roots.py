"""Secular-equation root finding: brackets, residuals, ordering, stability."""

from __future__ import annotations

import math

import numpy as np
import pytest

from nlbvp import _kernels
from nlbvp.roots import (
    ConvergenceError,
    RootResult,
    SecularEquation,
    enumerate_roots,
    solve_cot_root,
    solve_coth_fixed_point,
    solve_tan_root,
)


def bisect(f, lo: float, hi: float, sweeps: int = 80) -> float:
    """Plain bisection oracle, independent of the package solver."""
    flo = f(lo)
    assert flo * f(hi) < 0.0
    for _ in range(sweeps):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


# Frozen from the bisection oracle below (verified in the tests themselves).
ALPHA = 1.1996786402577338
COT_X1 = 2.7983860457838871
TAN_X1 = 4.4934094579090642


class TestCothFixedPoint:
    def test_value_against_bisection_oracle(self):
        oracle = bisect(lambda y: 1.0 / math.tanh(y) - y, 1.000000001, 2.0)
        result = solve_coth_fixed_point(1e-12)
        assert abs(result.value - oracle) < 1e-13
        assert abs(result.value - ALPHA) < 1e-14

    def test_residual_definition_of_root(self):
        result = solve_coth_fixed_point(1e-12)
        assert abs(1.0 / math.tanh(result.value) - result.value) <= 1e-12

    def test_negative_eigenvalue_link(self):
        a = solve_coth_fixed_point(1e-12).value
        assert abs(-4.0 * a * a - -5.756915) < 5e-7

    def test_bracket_and_metadata(self):
        result = solve_coth_fixed_point(1e-12)
        lo, hi = result.bracket
        assert lo < result.value < hi
        assert result.iterations <= 200

    def test_tol_validation(self):
        with pytest.raises(ValueError):
            solve_coth_fixed_point(0.0)


class TestCotRoots:
    def test_first_roots_against_bisection_oracle(self):
        # cot x = -x has no pole inside ((m-1/2)pi, m pi); bisect cot x + x.
        for m in range(1, 6):
            oracle = bisect(
                lambda x: 1.0 / math.tan(x) + x, (m - 0.5) * math.pi + 1e-9, m * math.pi - 1e-9
            )
            assert abs(solve_cot_root(m).value - oracle) < 1e-11

    def test_first_root_frozen_value(self):
        result = solve_cot_root(1, 1e-12)
        assert abs(result.value - COT_X1) < 1e-14
        # the root satisfies the defining equation, cot x = -x
        assert abs(1.0 / math.tan(result.value) + result.value) < 1e-12

    def test_even_eigenvalue_link(self):
        x1 = solve_cot_root(1).value
        assert abs(4.0 * x1 * x1 - 31.323857844951919) < 1e-12

    def test_residual_meets_tol_for_small_m(self):
        for m in range(1, 6):
            assert solve_cot_root(m, 1e-12).residual <= 1e-12

    def test_residual_scales_with_conditioning(self):
        # |d/dx (cot x + x)| = 1 + x^2 at the root, so the float64 residual
        # floor grows ~ x^3 eps; check against that envelope, not raw tol.
        for m in (10, 100, 1000, 10**4):
            r = solve_cot_root(m, 1e-12)
            envelope = 16.0 * (1.0 + r.value**3) * math.ulp(1.0)
            assert r.residual <= max(1e-12, envelope)

    def test_brackets_disjoint_and_increasing(self):
        results = [solve_cot_root(m) for m in range(1, 101)]
        for a, b in zip(results, results[1:]):
            assert a.bracket[1] <= b.bracket[0] + 1e-12
            assert a.value < b.value

    def test_bracket_containment_up_to_1e4(self):
        m = np.arange(1, 10**4 + 1, dtype=np.float64)
        x = _kernels.cot_roots(1, 10**4)
        assert np.all(x > (m - 0.5) * np.pi)
        assert np.all(x < m * np.pi)
        for probe in (1, 7, 99, 1234, 10**4):  # scalar path spot checks
            r = solve_cot_root(probe)
            assert r.bracket[0] < r.value < r.bracket[1]
            assert abs(r.value - x[probe - 1]) < 1e-9 * r.value

    def test_large_m_asymptotics(self):
        r = solve_cot_root(100)
        guess = 100 * math.pi - 1.0 / (100 * math.pi)
        assert abs(r.value - guess) < 1e-4

    def test_tol_refinement_stability(self):
        for m in (1, 3, 17):
            coarse = solve_cot_root(m, 1e-6).value
            fine = solve_cot_root(m, 1e-7).value
            assert abs(coarse - fine) <= 1e-6

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            solve_cot_root(0)
        with pytest.raises(ValueError):
            solve_cot_root(1, -1e-9)


class TestTanRoots:
    def test_first_root_against_bisection_oracle(self):
        oracle = bisect(lambda x: math.tan(x) - x, math.pi + 1e-9, 1.5 * math.pi - 1e-9)
        result = solve_tan_root(1, 1e-12)
        assert abs(result.value - oracle) < 1e-11
        assert abs(result.value - TAN_X1) < 1e-14
        assert abs(math.tan(result.value) - result.value) < 1e-12

    def test_roots_strictly_increasing(self):
        values = [solve_tan_root(k).value for k in range(1, 101)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_brackets(self):
        for k in (1, 2, 10, 50):
            r = solve_tan_root(k)
            assert k * math.pi < r.value < (k + 0.5) * math.pi
            assert r.bracket[0] < r.value < r.bracket[1]

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            solve_tan_root(0)


class TestEnumerateRoots:
    def test_zero_count_empty(self):
        assert enumerate_roots(SecularEquation.COT_NEG_X, 0) == []

    def test_ordered_triple(self):
        roots = enumerate_roots(SecularEquation.COT_NEG_X, 3)
        assert [type(r) for r in roots] == [RootResult] * 3
        assert roots[0].value < roots[1].value < roots[2].value

    def test_coth_single_root(self):
        (only,) = enumerate_roots(SecularEquation.COTH_FIXED_POINT, 1)
        assert abs(only.value - ALPHA) < 1e-12
        with pytest.raises(ValueError):
            enumerate_roots(SecularEquation.COTH_FIXED_POINT, 2)

    def test_deterministic(self):
        a = enumerate_roots(SecularEquation.TAN_EQ_X, 5)
        b = enumerate_roots(SecularEquation.TAN_EQ_X, 5)
        assert a == b

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            enumerate_roots(SecularEquation.COT_NEG_X, -1)


def test_convergence_error_carries_bracket():
    err = ConvergenceError("nope", (1.0, 2.0))
    assert err.bracket == (1.0, 2.0)
    assert "1.0" in str(err)
