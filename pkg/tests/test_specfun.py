import cmath
import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, strategies as st

from coshrep.branch_geometry import Params
from coshrep.errors import DomainError, NonFiniteError
from coshrep.specfun import (
    bessel_i1,
    bessel_i_half,
    cosh_sqrt,
    phi,
    product_identity_lhs_rhs,
    psi_sinc,
)

COSH_1 = 1.5430806348152437785
COSH_SQRT5 = 4.7316734711307665526
SINH_1 = 1.1752011936438014569


def i1_partial_sum(x, terms):
    # stated oracle: truncated ascending series
    total = 0.0
    for k in range(terms):
        total += (0.5 * x) ** (2 * k + 1) / (math.factorial(k) * math.factorial(k + 1))
    return total


class TestCoshSqrt:
    def test_zero(self):
        assert cosh_sqrt(0.0) == 1.0

    def test_one(self):
        assert cosh_sqrt(1.0) == pytest.approx(COSH_1, rel=1e-14)

    def test_minus_pi_squared(self):
        # cosh(i pi) = cos(pi) = -1
        assert cosh_sqrt(-math.pi ** 2) == pytest.approx(-1.0, abs=1e-12)

    def test_large_negative_switches_to_trig(self):
        x = -4.0e6
        assert cosh_sqrt(x) == pytest.approx(math.cos(math.sqrt(-x)), abs=1e-10)

    def test_large_positive(self):
        assert cosh_sqrt(3600.0) == pytest.approx(math.cosh(60.0), rel=1e-13)

    @given(st.complex_numbers(max_magnitude=30.0, allow_nan=False, allow_infinity=False))
    def test_complex_matches_even_composition(self, z):
        # cosh is even, so cosh(principal sqrt) is an independent oracle
        expected = cmath.cosh(cmath.sqrt(z))
        got = cosh_sqrt(z)
        assert abs(got - expected) <= 1e-11 * (1.0 + abs(expected))

    def test_array_input(self):
        z = np.array([0.0, 1.0, -math.pi ** 2])
        got = cosh_sqrt(z)
        assert got == pytest.approx([1.0, COSH_1, -1.0], abs=1e-12)

    def test_non_finite_rejected(self):
        with pytest.raises(NonFiniteError):
            cosh_sqrt(float("nan"))
        with pytest.raises(NonFiniteError):
            cosh_sqrt(complex(float("inf"), 0.0))


class TestPhi:
    def test_t_zero(self):
        assert phi(0.0, Params(1.0, 1.0)) == pytest.approx(COSH_1, rel=1e-14)

    def test_b_zero_collapses_to_cosh(self):
        p = Params(1.0, 0.0)
        for t in (-2.0, 0.3, 5.0):
            assert phi(t, p) == pytest.approx(math.cosh(t), rel=1e-13)

    def test_value_at_two(self):
        assert phi(2.0, Params(1.0, 1.0)) == pytest.approx(COSH_SQRT5, rel=1e-13)

    def test_consistency_with_cosh_sqrt(self):
        p = Params(2.0, 0.7)
        for t in (0.0, 1.3, -2.1):
            assert phi(t, p) == pytest.approx(cosh_sqrt(p.a * t * t + p.b), rel=1e-14)

    @given(st.floats(min_value=-20.0, max_value=20.0, allow_nan=False))
    def test_even_in_t(self, t):
        p = Params(1.5, 0.5)
        assert phi(t, p) == phi(-t, p)

    def test_real_input_real_output_geq_one(self):
        p = Params(0.5, 2.0)
        ts = np.linspace(-4, 4, 17)
        vals = phi(ts, p)
        assert isinstance(vals, np.ndarray)
        assert np.all(vals >= 1.0)

    def test_complex_input(self):
        p = Params(1.0, 1.0)
        got = phi(2j, p)
        # a(2i)^2 + b = -3, cosh(sqrt(-3)) = cos(sqrt(3))
        assert got == pytest.approx(math.cos(math.sqrt(3.0)), abs=1e-13)

    def test_non_finite_rejected(self):
        p = Params(1.0, 1.0)
        with pytest.raises(NonFiniteError):
            phi(float("nan"), p)
        with pytest.raises(NonFiniteError):
            psi_sinc(np.array([0.0, float("inf")]), p)


class TestPsiSinc:
    def test_removable_singularity(self):
        assert psi_sinc(0.0, Params(1.0, 0.0)) == 1.0

    def test_t_zero_b_one(self):
        assert psi_sinc(0.0, Params(1.0, 1.0)) == pytest.approx(SINH_1, rel=1e-14)

    def test_a4_b0(self):
        assert psi_sinc(1.0, Params(4.0, 0.0)) == pytest.approx(1.8134302039235093838, rel=1e-13)

    @given(st.floats(min_value=-10.0, max_value=10.0, allow_nan=False))
    def test_even_and_geq_one(self, t):
        p = Params(2.0, 0.3)
        v = psi_sinc(t, p)
        assert v == psi_sinc(-t, p)
        assert v >= 1.0


class TestBesselI1:
    def test_zero(self):
        assert bessel_i1(0.0) == 0.0

    def test_one_vs_series_oracle(self):
        assert bessel_i1(1.0) == pytest.approx(i1_partial_sum(1.0, 30), abs=1e-10)

    def test_two_vs_series_oracle(self):
        assert bessel_i1(2.0) == pytest.approx(i1_partial_sum(2.0, 40), abs=1e-9)

    @pytest.mark.parametrize("x", [0.1, 0.8, 1.0, 5.0, 20.0, 50.0])
    def test_against_scipy(self, x):
        assert bessel_i1(x) == pytest.approx(float(scipy.special.iv(1, x)), rel=1e-13)

    def test_truncation_is_converged(self):
        # one more series term changes the partial sum by < 1e-16 relative
        x = 7.0
        n = 1
        term = 0.5 * x
        total = term
        while term > 1e-17 * total:
            term *= 0.25 * x * x / (n * (n + 1.0))
            total += term
            n += 1
        extra = term * 0.25 * x * x / (n * (n + 1.0))
        assert extra <= 1e-16 * total
        assert bessel_i1(x) == pytest.approx(total, rel=5e-16)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            bessel_i1(-0.5)
        with pytest.raises(OverflowError):
            bessel_i1(701.0)


class TestBesselIHalf:
    def test_order_half_closed_form(self):
        expected = math.sqrt(2.0 / math.pi) * math.sinh(1.0)
        assert bessel_i_half(1, 1.0) == pytest.approx(expected, rel=1e-13)
        assert expected == pytest.approx(0.93767488824548764672, rel=1e-14)

    def test_order_three_halves_closed_form(self):
        expected = math.sqrt(2.0 / math.pi) * (math.cosh(1.0) - math.sinh(1.0))
        assert bessel_i_half(2, 1.0) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(0.29352532634747979979, rel=1e-13)

    def test_small_x_leading_order(self):
        x = 1e-4
        # I_{1/2}(x) ~ sqrt(2/pi) * x / sqrt(x) * (1 + O(x^2))
        assert bessel_i_half(1, x) * math.sqrt(x) == pytest.approx(
            math.sqrt(2.0 / math.pi) * x, rel=1e-6
        )

    @pytest.mark.parametrize("k", range(1, 13))
    @pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 20.0])
    def test_against_scipy(self, k, x):
        assert bessel_i_half(k, x) == pytest.approx(
            float(scipy.special.iv(k - 0.5, x)), rel=1e-9
        )

    @pytest.mark.parametrize("k", range(1, 13))
    def test_strictly_positive(self, k):
        assert bessel_i_half(k, 0.3) > 0.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            bessel_i_half(0, 1.0)
        with pytest.raises(DomainError):
            bessel_i_half(1, 0.0)
        with pytest.raises(DomainError):
            bessel_i_half(1, -1.0)


class TestProductIdentity:
    def test_zero_limit(self):
        lhs, rhs = product_identity_lhs_rhs(0.0, 10)
        assert lhs == 1.0
        assert rhs == pytest.approx(1.0, rel=1e-15)

    def test_real_one(self):
        lhs, rhs = product_identity_lhs_rhs(1.0, 40)
        assert lhs == pytest.approx(SINH_1, rel=1e-14)
        assert abs(lhs - rhs) < 1e-13

    def test_imaginary_two(self):
        lhs, rhs = product_identity_lhs_rhs(2j, 40)
        # sinh(2i)/(2i) = sin(2)/2
        assert lhs == pytest.approx(0.4546487134128408477, rel=1e-13)
        assert abs(lhs - rhs) < 1e-13

    @pytest.mark.parametrize("M", [10, 20, 40])
    def test_truncation_bound(self, M):
        for z in (0.5, 2.0 + 1.0j, -3.0 + 2.0j, 5.0j, 4.0 - 3.0j):
            lhs, rhs = product_identity_lhs_rhs(z, M)
            bound = 2.0 ** -M * abs(z) * math.exp(abs(z)) + 1e-13
            assert abs(lhs - rhs) <= bound
