import math

import numpy as np
import pytest

from coshrep.branch_geometry import Params
from coshrep.errors import DepthGuardError, DomainError, InvalidOrderError
from coshrep.specfun import phi
from coshrep.taylor import (
    CompositionSequence,
    compositions,
    phi_from_taylor,
    phi_k_bessel,
    phi_k_integral,
    phi_xi_derivative_series,
    psi_k_recursion,
)

COSH_1 = 1.5430806348152437785
SINH1_OVER_2 = 0.58760059682190072844
PHI2_11 = 0.091969860292860580399

# psi_k(1, 1) for k = 0..8, frozen from a 30-digit derivative oracle
PSI_1_1 = [
    1.5430806348152438,
    0.58760059682190073,
    0.09196986029286058,
    0.0089453587661843115,
    0.00062906815775436632,
    3.4601139405795759e-5,
    1.5619121125106655e-6,
    5.9768232640279454e-8,
    1.9845159658499228e-9,
]

# phi_k(0.7, 4) for k = 1..6, frozen from a 30-digit quadrature oracle
PHI_K_07_4 = [
    0.6801076790898336,
    0.1008524371445757,
    0.009565440844691262,
    0.0006630138644978391,
    3.612841093386664e-5,
    1.620212715336691e-6,
]


class TestIntegralRoute:
    def test_k0_is_cosh(self):
        assert phi_k_integral(0, 1.0, 1.0, 16) == pytest.approx(COSH_1, rel=1e-14)

    def test_k1_value(self):
        assert phi_k_integral(1, 1.0, 1.0, 64) == pytest.approx(SINH1_OVER_2, rel=1e-13)

    def test_k1_at_t0(self):
        assert phi_k_integral(1, 0.0, 1.0, 64) == pytest.approx(0.5, rel=1e-14)

    def test_k2_value(self):
        assert phi_k_integral(2, 1.0, 1.0, 64) == pytest.approx(PHI2_11, rel=1e-12)

    def test_frozen_oracle_grid(self):
        for k, expected in enumerate(PHI_K_07_4, start=1):
            assert phi_k_integral(k, 0.7, 4.0, 64) == pytest.approx(expected, rel=1e-12)

    def test_vectorized_over_t(self):
        ts = np.array([-2.0, 0.0, 1.0])
        vals = phi_k_integral(1, ts, 1.0, 64)
        assert vals == pytest.approx([phi_k_integral(1, float(t), 1.0, 64) for t in ts])

    @pytest.mark.parametrize("k", range(0, 7))
    def test_strictly_positive(self, k):
        for t in (-3.0, 0.0, 0.5, 4.0):
            assert phi_k_integral(k, t, 2.0, 64) > 0.0

    def test_guards(self):
        with pytest.raises(InvalidOrderError):
            phi_k_integral(1, 1.0, 1.0, 8)
        with pytest.raises(DomainError):
            phi_k_integral(-1, 1.0, 1.0, 64)
        with pytest.raises(DomainError):
            phi_k_integral(1, 1.0, 0.0, 64)


class TestBesselRoute:
    def test_k1_closed_form(self):
        assert phi_k_bessel(1, 1.0, 1.0) == pytest.approx(SINH1_OVER_2, rel=1e-13)

    def test_k2_matches_integral(self):
        assert phi_k_bessel(2, 1.0, 1.0) == pytest.approx(
            phi_k_integral(2, 1.0, 1.0, 64), abs=1e-9
        )

    def test_even_by_delegation(self):
        assert phi_k_bessel(3, -1.3, 2.0) == phi_k_bessel(3, 1.3, 2.0)

    def test_t0_is_integral_route(self):
        with pytest.raises(DomainError, match="integral"):
            phi_k_bessel(1, 0.0, 1.0)

    @pytest.mark.parametrize("k", range(1, 11))
    @pytest.mark.parametrize("t", [0.5, 1.0, 2.0, 5.0])
    @pytest.mark.parametrize("a", [0.5, 1.0, 4.0])
    def test_cross_route_battery(self, k, t, a):
        ref = phi_k_integral(k, t, a, 96)
        assert abs(phi_k_bessel(k, t, a) - ref) < 1e-9 * (1.0 + abs(ref))


class TestRecursion:
    def test_base_case(self):
        assert psi_k_recursion(0, 1.0, 1.0, 25) == pytest.approx(COSH_1, rel=1e-14)

    def test_k1_product_identity_value(self):
        assert psi_k_recursion(1, 1.0, 1.0, 25) == pytest.approx(SINH1_OVER_2, rel=1e-13)

    @pytest.mark.parametrize("k", range(0, 9))
    def test_frozen_derivative_oracle(self, k):
        assert psi_k_recursion(k, 1.0, 1.0, 30) == pytest.approx(PSI_1_1[k], rel=1e-10)

    def test_coeq_cross_route(self):
        # phi_k(t, a) = psi_k(t, sqrt(a)) a^{-k}
        for k, expected in enumerate(PHI_K_07_4, start=1):
            got = psi_k_recursion(k, 0.7, 2.0, 25) * 4.0 ** (-k)
            assert got == pytest.approx(expected, rel=1e-9)

    def test_even_in_t_and_eta(self):
        assert psi_k_recursion(3, -1.1, 1.7, 25) == psi_k_recursion(3, 1.1, 1.7, 25)
        assert psi_k_recursion(3, 1.1, -1.7, 25) == psi_k_recursion(3, 1.1, 1.7, 25)

    def test_depth_guards(self):
        with pytest.raises(DepthGuardError):
            psi_k_recursion(9, 1.0, 1.0, 25)
        with pytest.raises(DepthGuardError):
            psi_k_recursion(2, 1.0, 1.0, 19)

    def test_truncation_depth_insensitive(self):
        v20 = psi_k_recursion(6, 1.0, 1.0, 20)
        v40 = psi_k_recursion(6, 1.0, 1.0, 40)
        assert v20 == pytest.approx(v40, rel=1e-9)


class TestCompositions:
    def test_counts_are_weak_compositions(self):
        # weak compositions of k into m_max ordered parts: C(k + m_max - 1, m_max - 1)
        for k, m_max in ((0, 4), (1, 3), (2, 4), (3, 5), (4, 3)):
            got = sum(1 for _ in compositions(k, m_max))
            assert got == math.comb(k + m_max - 1, m_max - 1)

    def test_multinomial_weights_sum_to_power(self):
        # sum over |l| = k of k!/prod(l_m!) over m_max positions equals m_max^k
        for k, m_max in ((2, 3), (3, 4), (4, 5)):
            total = sum(c.multinomial_weight() for c in compositions(k, m_max))
            assert total == m_max ** k

    def test_entries_validation(self):
        with pytest.raises(DomainError):
            CompositionSequence(entries=((2, 1), (1, 1)))
        with pytest.raises(DomainError):
            CompositionSequence(entries=((1, 0),))

    def test_recursion_matches_explicit_enumeration(self):
        # rebuild psi_{k+1} from the definition: multinomial-weighted products
        # over supported positions, all-zero tails closed by sinh(x)/x
        t, eta, M = 0.9, 1.2, 22
        for k in range(0, 4):
            total = 0.0
            for comp in compositions(k, M):
                prod = 1.0
                support = dict(comp.entries)
                last = max(support) if support else 0
                for m in range(1, last + 1):
                    l = support.get(m, 0)
                    prod *= psi_k_recursion(l, t, eta / 2.0 ** m, M)
                x = eta * t / 2.0 ** last
                prod *= math.sinh(x) / x if x != 0.0 else 1.0
                total += comp.multinomial_weight() * prod
            expected = psi_k_recursion(k + 1, t, eta, M)
            assert 0.5 * eta * eta * total == pytest.approx(expected, rel=1e-9)


class TestResummation:
    def test_b_zero_only_k0(self):
        res = phi_from_taylor(1.3, Params(2.0, 0.0), 5)
        assert res.value == pytest.approx(math.cosh(math.sqrt(2.0) * 1.3), rel=1e-13)
        assert res.last_term == 0.0

    def test_reproduces_phi_at_111(self):
        res = phi_from_taylor(1.0, Params(1.0, 1.0), 12)
        assert res.value == pytest.approx(2.178183556608570864, abs=1e-9)

    def test_large_b_needs_larger_K(self):
        res = phi_from_taylor(0.0, Params(1.0, 10.0), 25)
        assert res.value == pytest.approx(11.833336070820503045, abs=1e-6)

    def test_remainder_dominated_by_next_term(self):
        p = Params(1.0, 2.0)
        for K in (6, 9, 12):
            res = phi_from_taylor(1.0, p, K)
            next_term = phi_k_integral(K + 1, 1.0, p.a, 64) * p.b ** (K + 1) / math.factorial(K + 1)
            assert abs(res.value - phi(1.0, p)) <= 2.0 * next_term + 1e-15

    def test_derivative_in_b_matches_coefficient_series(self):
        # centered difference of phi in b against sum phi_k b^{k-1}/(k-1)!
        p = Params(1.0, 1.5)
        h = 1e-5
        fd = (phi(1.0, Params(1.0, p.b + h)) - phi(1.0, Params(1.0, p.b - h))) / (2.0 * h)
        series = sum(
            phi_k_integral(k, 1.0, 1.0, 64) * p.b ** (k - 1) / math.factorial(k - 1)
            for k in range(1, 14)
        )
        assert fd == pytest.approx(series, abs=1e-6)


class TestDerivativeSeries:
    def test_xi_zero_collapses_to_psi1(self):
        got = phi_xi_derivative_series(1, 1.0, 1.0, 0.0, 8)
        assert got == pytest.approx(SINH1_OVER_2, rel=1e-12)

    def test_xi_zero_m2_collapses_to_psi2(self):
        got = phi_xi_derivative_series(2, 1.0, 1.0, 0.0, 8)
        assert got == pytest.approx(PHI2_11, rel=1e-11)

    def test_closed_form_at_half(self):
        got = phi_xi_derivative_series(1, 1.0, 1.0, 0.5, 8)
        assert got == pytest.approx(0.63471689291590589094, abs=1e-8)

    @pytest.mark.parametrize("xi", [0.0, 0.25, 0.5])
    def test_closed_form_grid(self, xi):
        t, eta = 0.7, 1.3
        got = phi_xi_derivative_series(1, t, eta, xi, 8)
        root = math.sqrt(t * t + xi)
        assert got == pytest.approx(0.5 * eta * math.sinh(eta * root) / root, abs=1e-8)

    def test_guards(self):
        with pytest.raises(DepthGuardError):
            phi_xi_derivative_series(5, 1.0, 1.0, 0.1, 8)
        with pytest.raises(DepthGuardError):
            phi_xi_derivative_series(1, 1.0, 1.0, 0.1, 9)
        with pytest.raises(DomainError):
            phi_xi_derivative_series(2, 1.0, 1.0, 0.1, 1)
        with pytest.raises(DepthGuardError, match="tail"):
            phi_xi_derivative_series(1, 1.0, 1.0, 30.0, 8)
