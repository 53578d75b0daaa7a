"""Acceptance suite: every numbered criterion at its stated tolerance.

The full battery is computed once per session; each test asserts one
criterion and prints its report line, so `pytest -v` shows one pass/fail
line per criterion.
"""
import pytest

from coshrep.verify import CRITERIA, run_battery


@pytest.fixture(scope="module")
def battery():
    results = run_battery(quick=False, seed=42)
    return {r.cid: r for r in results}


def _assert_criterion(battery, cid):
    r = battery[cid]
    status = "PASS" if r.passed else "FAIL"
    print(f"{status} {r.cid:02d} {r.name} measured={r.measured:.6e} limit: {r.limit}")
    assert r.passed, f"criterion {r.cid} ({r.name}): measured={r.measured!r}, limit {r.limit}"


def test_c01_endpoint_identity(battery):
    _assert_criterion(battery, 1)


def test_c02_four_method_agreement(battery):
    _assert_criterion(battery, 2)


def test_c03_density_positivity(battery):
    _assert_criterion(battery, 3)


def test_c04_laplace_reconstruction(battery):
    _assert_criterion(battery, 4)


def test_c05_total_mass_identity(battery):
    _assert_criterion(battery, 5)


def test_c06_fourier_identity(battery):
    _assert_criterion(battery, 6)


def test_c07_tail_asymptotic(battery):
    _assert_criterion(battery, 7)


def test_c08_branch_correctness(battery):
    _assert_criterion(battery, 8)


def test_c09_level_set_ellipse(battery):
    _assert_criterion(battery, 9)


def test_c10_sign_dichotomy(battery):
    _assert_criterion(battery, 10)


def test_c11_taylor_three_routes(battery):
    _assert_criterion(battery, 11)


def test_c12_derivative_series(battery):
    _assert_criterion(battery, 12)


def test_c13_product_identity(battery):
    _assert_criterion(battery, 13)


def test_c14_exponential_convexity(battery):
    _assert_criterion(battery, 14)


def test_c15_closure_properties(battery):
    _assert_criterion(battery, 15)


def test_c16_two_point_inequality(battery):
    _assert_criterion(battery, 16)


def test_c17_bmv_reduction(battery):
    _assert_criterion(battery, 17)


def test_c18_output_determinism(battery):
    _assert_criterion(battery, 18)


def test_battery_is_complete(battery):
    assert len(CRITERIA) == 18
    assert sorted(battery) == list(range(1, 19))
