"""Exact power-sum pipelines: published values, cross agreement, structure."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from nlbvp.eigen import coth_alpha
from nlbvp.rayleigh import (
    NEWTON_CAP,
    Method,
    bernoulli,
    maclaurin_coeffs,
    power_sums_bernoulli,
    power_sums_newton,
    power_sums_recursion,
    s_values,
    t_sequence,
    zeta_even,
)

FIRST_FIVE = (
    Fraction(0),
    Fraction(1, 24),
    Fraction(-1, 240),
    Fraction(41, 40320),
    Fraction(-107, 725760),
)


class TestBernoulli:
    def test_known_values(self):
        b = bernoulli(4)
        assert b[2] == Fraction(1, 6)
        assert b[3] == 0
        assert b[4] == Fraction(-1, 30)

    def test_odd_values_vanish(self):
        b = bernoulli(25)
        assert all(b[n] == 0 for n in range(3, 26, 2))

    def test_defining_recurrence(self):
        b = bernoulli(24)
        for n in range(1, 25):
            assert sum(math.comb(n + 1, k) * b[k] for k in range(n + 1)) == 0


class TestRecursionPipeline:
    def test_published_values(self):
        assert power_sums_recursion(5).values == FIRST_FIVE

    def test_method_tag_and_accessor(self):
        table = power_sums_recursion(3)
        assert table.method is Method.RECURSION
        assert table.a(2) == Fraction(1, 24)
        with pytest.raises(ValueError):
            table.a(4)

    def test_validation(self):
        with pytest.raises(ValueError):
            power_sums_recursion(0)


class TestTSequence:
    def test_t2_forced(self):
        assert t_sequence(1) == (Fraction(-1, 2),)

    def test_reconstruct_a2_from_t4(self):
        t = t_sequence(2)
        b = bernoulli(4)
        a2 = t[1] / 16 + Fraction(15, 2 * math.factorial(4)) * abs(b[4])
        assert a2 == Fraction(1, 24)

    def test_all_entries_rational(self):
        assert all(isinstance(v, Fraction) for v in t_sequence(10))


class TestBernoulliPipeline:
    def test_p1_vanishes(self):
        assert power_sums_bernoulli(1).a(1) == 0

    def test_published_values(self):
        table = power_sums_bernoulli(4)
        assert table.a(2) == Fraction(1, 24)
        assert table.a(4) == Fraction(41, 40320)


class TestMaclaurinCoefficients:
    def test_constant_term(self):
        assert maclaurin_coeffs(1)[0] == 1

    def test_a1_vanishes(self):
        # (-1) * (1/(2*2!) - 1/(4*1!)) = -(1/4 - 1/4) = 0
        assert maclaurin_coeffs(1)[1] == 0

    def test_a2(self):
        assert maclaurin_coeffs(2)[2] == Fraction(-1, 48)


class TestNewtonPipeline:
    def test_first_values(self):
        table = power_sums_newton(4)
        assert table.a(1) == 0
        assert table.a(2) == Fraction(1, 24)
        assert table.a(4) == Fraction(41, 40320)

    def test_cap(self):
        with pytest.raises(ValueError):
            power_sums_newton(NEWTON_CAP + 1)


class TestZetaEven:
    def test_basel(self):
        assert zeta_even(1) == Fraction(1, 6)

    def test_p2(self):
        assert zeta_even(2) == Fraction(1, 90)

    def test_odd_mode_coefficient(self):
        # sum over odd integers only: (1 - 2^-2p) of the full even zeta
        assert (1 - Fraction(1, 4)) * zeta_even(1) == Fraction(1, 8)


class TestCrossMethodAgreement:
    def test_exact_agreement_up_to_12(self):
        t1 = power_sums_recursion(12)
        t2 = power_sums_bernoulli(12)
        t3 = power_sums_newton(12)
        assert t1.values == t2.values == t3.values

    def test_sign_pattern(self, exact_table_40):
        for p in range(2, 13):
            assert (-1) ** p * exact_table_40.a(p) > 0

    def test_root_growth_rate(self, exact_table_40):
        lam0 = -4.0 * coth_alpha() ** 2
        assert abs(float(abs(exact_table_40.a(12))) ** (1.0 / 12.0) - 1.0 / abs(lam0)) < 1e-3

    def test_ratio_converges_to_lambda0(self, exact_table_40):
        # The gap decays like (lambda_0/pi^2)^p: ~1.4e-2 at p=12, inside
        # 1e-3 from p=20 on.
        lam0 = -4.0 * coth_alpha() ** 2
        ratio_12 = float(exact_table_40.a(12) / exact_table_40.a(13))
        assert abs(ratio_12 - lam0) < 2e-2
        ratio_20 = float(exact_table_40.a(20) / exact_table_40.a(21))
        assert abs(ratio_20 - lam0) < 1e-3


class TestSValues:
    def test_s2_identity(self):
        a = coth_alpha()
        s = s_values(3, a)
        assert s[0] == pytest.approx(1.0 / (a * a) - 0.5, abs=1e-15)

    def test_s2_numeric_value(self):
        assert s_values(1, coth_alpha())[0] == pytest.approx(0.1948, abs=1e-4)

    def test_s2_matches_direct_root_sum(self):
        from nlbvp import _kernels

        m_terms = 200_000
        direct = _kernels.cot_root_power_sum(m_terms, 2)
        tail = 1.0 / (math.pi**2 * (m_terms - 0.5))
        assert abs(s_values(1, coth_alpha())[0] - direct) <= tail

    def test_validation(self):
        with pytest.raises(ValueError):
            s_values(0, 1.2)
        with pytest.raises(ValueError):
            s_values(1, 0.9)
