import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coshrep.errors import InvalidIntervalError, InvalidOrderError, NonFiniteError
from coshrep.quadrature import gauss_legendre, integrate

# root of the degree-2 Legendre polynomial, frozen from a bisection root-finder
P2_ROOT = 0.5773502691896257645


def test_one_point_rule_is_midpoint():
    r = gauss_legendre(1)
    assert r.nodes.tolist() == [0.0]
    assert r.weights.tolist() == [2.0]


def test_two_point_rule_matches_root_finder():
    r = gauss_legendre(2)
    assert r.nodes == pytest.approx([-P2_ROOT, P2_ROOT], abs=1e-15)
    assert r.weights == pytest.approx([1.0, 1.0], abs=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16, 33, 128])
def test_rule_invariants(n):
    r = gauss_legendre(n)
    assert r.order == n
    assert np.all(np.diff(r.nodes) > 0)
    assert np.all(r.weights > 0)
    # symmetric about 0
    assert np.max(np.abs(r.nodes + r.nodes[::-1])) <= 1e-14
    assert abs(float(np.sum(r.weights)) - 2.0) <= 1e-13


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16])
def test_exactness_on_monomials(n):
    r = gauss_legendre(n)
    for k in range(2 * n):
        approx = float(np.dot(r.weights, r.nodes ** k))
        if k % 2 == 1:
            assert abs(approx) <= 1e-13
        else:
            exact = 2.0 / (k + 1)
            assert abs(approx - exact) <= 1e-12 * exact


def test_x8_against_antiderivative_oracle():
    assert integrate(lambda x: x ** 8, -1.0, 1.0, 5) == pytest.approx(2.0 / 9.0, abs=1e-12)


def test_cosh_against_antiderivative_oracle():
    # int_{-1}^{1} cosh = 2 sinh(1)
    assert integrate(np.cosh, -1.0, 1.0, 16) == pytest.approx(2.3504023872876029138, abs=1e-12)


def test_constant_any_interval():
    assert integrate(lambda x: 0.0 * x + 3.25, -2.0, 7.0, 4) == pytest.approx(3.25 * 9.0, rel=1e-14)


@pytest.mark.parametrize(
    "f,lo,hi,exact",
    [
        (np.cosh, -1.0, 1.0, 2.0 * math.sinh(1.0)),
        (np.exp, 0.0, 1.0, math.e - 1.0),
        (lambda x: 1.0 / (1.0 + x * x), -1.0, 1.0, 0.5 * math.pi),
    ],
)
def test_doubling_never_degrades_much(f, lo, hi, exact):
    errs = [abs(integrate(f, lo, hi, n) - exact) for n in (4, 8, 16, 32, 64)]
    for e_n, e_2n in zip(errs, errs[1:]):
        assert e_2n <= 10.0 * e_n + 1e-15


def test_linearity():
    f = np.cosh
    g = np.sin
    alpha, beta = 2.5, -1.25
    lhs = integrate(lambda x: alpha * f(x) + beta * g(x), -1.0, 2.0, 24)
    rhs = alpha * integrate(f, -1.0, 2.0, 24) + beta * integrate(g, -1.0, 2.0, 24)
    assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(lhs))


@given(st.integers(min_value=1, max_value=48))
def test_matches_numpy_leggauss(n):
    r = gauss_legendre(n)
    xs, ws = np.polynomial.legendre.leggauss(n)
    assert np.max(np.abs(r.nodes - xs)) <= 1e-13
    assert np.max(np.abs(r.weights - ws)) <= 1e-13


def test_rule_cache_returns_same_object_and_is_readonly():
    r1 = gauss_legendre(17)
    r2 = gauss_legendre(17)
    assert r1 is r2
    with pytest.raises(ValueError):
        r1.nodes[0] = 0.0


def test_invalid_orders():
    with pytest.raises(InvalidOrderError):
        gauss_legendre(0)
    with pytest.raises(InvalidOrderError):
        gauss_legendre(4097)
    with pytest.raises(InvalidOrderError):
        gauss_legendre(2.0)
    with pytest.raises(InvalidOrderError):
        gauss_legendre(True)
    gauss_legendre(4096)  # boundary order is allowed


def test_invalid_interval():
    with pytest.raises(InvalidIntervalError):
        integrate(np.cosh, 1.0, 1.0, 8)
    with pytest.raises(InvalidIntervalError):
        integrate(np.cosh, 2.0, -2.0, 8)


def test_non_finite_integrand_names_node():
    with np.errstate(divide="ignore", invalid="ignore"):
        with pytest.raises(NonFiniteError, match="node"):
            integrate(lambda x: 1.0 / (x - x), 0.0, 1.0, 8)


def test_scalar_only_callable_supported():
    val = integrate(lambda x: math.cosh(x), -1.0, 1.0, 16)
    assert val == pytest.approx(2.0 * math.sinh(1.0), abs=1e-12)


def test_concurrent_cache_access():
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=8) as pool:
        rules = list(pool.map(gauss_legendre, [97] * 32))
    assert all(r is rules[0] for r in rules)
