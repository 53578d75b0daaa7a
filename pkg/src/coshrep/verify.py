"""The acceptance battery: eighteen numbered criteria, one line each.

Every criterion reports a scalar `measured` value and the limit it was held
to; composite criteria report the worst tolerance-normalized ratio, so
`measured <= 1` means pass for those.  `run_battery` is what `coshrep
verify` executes; the pytest acceptance module asserts the same results.
"""
import math
from typing import Callable, NamedTuple

import numpy as np

from . import bmv2 as bmv_mod
from . import branch_geometry as branch_mod
from . import density as density_mod
from . import laplace_rep as laplace_mod
from . import taylor as taylor_mod
from ._backend import cosh_sqrt_real, density_series_arr
from ._format import density_csv, gram_json, measure_json
from .branch_geometry import Params, ellipse_for, sqrt_branch, uv
from .density import DensityMethod
from .expconvex_gram import (
    UniformStream,
    check_exp_convex,
    closure_property_suite,
    two_point_inequality,
)
from .quadrature import gauss_legendre
from .specfun import phi, product_identity_lhs_rhs, psi_sinc

AB_DENSITY = [(a, b) for a in (0.5, 1.0, 4.0) for b in (0.1, 1.0, 10.0)]
AB_CONVEX = [(a, b) for a in (0.5, 1.0, 4.0) for b in (0.0, 1.0, 10.0)]
AB_RECONSTRUCT = [(a, b) for a in (0.5, 1.0, 4.0) for b in (0.0, 0.1, 1.0, 10.0)]

AB_DENSITY_QUICK = [(1.0, 1.0), (4.0, 0.1), (0.5, 10.0)]
AB_CONVEX_QUICK = [(1.0, 1.0), (4.0, 0.0), (0.5, 10.0)]
AB_RECONSTRUCT_QUICK = [(1.0, 1.0), (4.0, 0.0), (0.5, 10.0)]


class CriterionResult(NamedTuple):
    cid: int
    name: str
    passed: bool
    measured: float
    limit: str


def _interior_grid(p: Params, n_inclusive: int = 23) -> np.ndarray:
    lams = np.linspace(-p.sqrt_a, p.sqrt_a, n_inclusive)
    return lams[1:-1]


def _density_by_all_methods(p: Params, lams: np.ndarray) -> dict[str, np.ndarray]:
    return {
        "series": np.array([density_mod.density_series(l, p) for l in lams]),
        "bessel": np.array([density_mod.density_bessel(l, p) for l in lams]),
        "sinh_quadrature": np.array(
            [density_mod.density_sinh_quadrature(l, p, 128) for l in lams]
        ),
        "contour_ellipse": np.array(
            [density_mod.density_contour_ellipse(l, p, 512) for l in lams]
        ),
    }


def c01_endpoint_identity(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    worst = 0.0
    for a, b in combos:
        p = Params(a, b)
        target = p.b / (4.0 * p.sqrt_a)
        for lam in (p.sqrt_a, -p.sqrt_a):
            rel = abs(density_mod.density_series(lam, p) - target) / target
            worst = max(worst, rel)
    return CriterionResult(1, "endpoint-identity", worst < 1e-12, worst, "< 1e-12 rel")


def c02_four_method_agreement(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    worst = 0.0
    for a, b in combos:
        p = Params(a, b)
        vals = _density_by_all_methods(p, _interior_grid(p))
        methods = list(vals)
        for i in range(len(methods)):
            for j in range(i + 1, len(methods)):
                worst = max(worst, float(np.max(np.abs(vals[methods[i]] - vals[methods[j]]))))
    return CriterionResult(2, "four-method-agreement", worst < 1e-8, worst, "< 1e-8 abs")


def c03_positivity(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    lowest = math.inf
    for a, b in combos:
        p = Params(a, b)
        for v in _density_by_all_methods(p, _interior_grid(p)).values():
            lowest = min(lowest, float(np.min(v)))
    return CriterionResult(3, "density-positivity", lowest > 0.0, lowest, "> 0 strictly")


def c04_reconstruction(quick: bool, seed: int) -> CriterionResult:
    combos = AB_RECONSTRUCT_QUICK if quick else AB_RECONSTRUCT
    ts = np.linspace(-5.0, 5.0, 41)
    worst = 0.0
    for a, b in combos:
        p = Params(a, b)
        m = laplace_mod.representing_measure(p, 65)
        for t in ts:
            err = abs(laplace_mod.reconstruct_phi(m, float(t), 32) - phi(float(t), p))
            worst = max(worst, err)
    return CriterionResult(4, "laplace-reconstruction", worst < 1e-8, worst, "< 1e-8 abs")


def c05_total_mass(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    worst = 0.0
    for a, b in combos:
        p = Params(a, b)
        rule = gauss_legendre(256)
        lams = p.sqrt_a * rule.nodes
        total = p.sqrt_a * float(np.dot(rule.weights, density_series_arr(lams, p.a, p.b)))
        worst = max(worst, abs(1.0 + total - cosh_sqrt_real(p.b)))
    return CriterionResult(5, "total-mass-identity", worst < 1e-9, worst, "< 1e-9 abs")


def c06_fourier_identity(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    taus = (0.0, 1.0, 5.0, 10.0, 50.0)
    worst = 0.0
    for a, b in combos:
        p = Params(a, b)
        for tau in taus:
            worst = max(worst, laplace_mod.verify_fourier(p, tau, 512))
    return CriterionResult(6, "fourier-identity", worst < 1e-8, worst, "< 1e-8 abs")


def c07_tail_asymptotic(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    taus = np.logspace(1.0, 3.0, 129)
    worst_ratio = 0.0
    for a, b in combos:
        p = Params(a, b)
        r = laplace_mod.verify_tail_asymptotic(p, taus)
        m1 = float(np.max(r[taus <= 100.0]))
        m2 = float(np.max(r[taus >= 100.0]))
        worst_ratio = max(worst_ratio, m2 / m1)
    return CriterionResult(
        7, "tail-asymptotic-bounded", worst_ratio <= 2.0, worst_ratio, "decade ratio <= 2"
    )


def c08_branch_correctness(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    n_random = 200 if quick else 1000
    worst = 0.0
    stream = UniformStream(seed)
    for a, b in combos:
        p = Params(a, b)
        h = math.sqrt(b / a)
        etas = np.linspace(-0.99 * h, 0.99 * h, 41)
        edge = np.sqrt(b - a * etas ** 2)
        w_right = sqrt_branch(1e-8 + 1j * etas, p)
        w_left = sqrt_branch(-1e-8 + 1j * etas, p)
        edge_err = max(
            float(np.max(np.abs(w_right - edge))), float(np.max(np.abs(w_left + edge)))
        )
        worst = max(worst, edge_err / 1e-6)
        pts = []
        while len(pts) < n_random:
            z = complex(-3.0 + 6.0 * stream.next(), -3.0 + 6.0 * stream.next())
            if branch_mod.slit_distance(z, h) > 1e-6:
                pts.append(z)
        zs = np.array(pts)
        w = sqrt_branch(zs, p)
        w_conj = sqrt_branch(np.conjugate(zs), p)
        conj_err = float(np.max(np.abs(w_conj - np.conjugate(w)) / (1.0 + np.abs(w))))
        target = a * zs * zs + b
        sq_err = float(np.max(np.abs(w * w - target) / (1.0 + np.abs(target))))
        worst = max(worst, conj_err / 1e-12, sq_err / 1e-12)
    return CriterionResult(8, "branch-correctness", worst <= 1.0, worst, "<= 1 (normalized)")


def c09_level_set_ellipse(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    worst = 0.0
    ok = True
    for a, b in combos:
        p = Params(a, b)
        lam = -0.5 * p.sqrt_a
        c = ellipse_for(lam, p)
        maxv = branch_mod.verify_level_set(c, p, 256)
        worst = max(worst, maxv / (1e-9 * (1.0 + abs(lam)) * c.B))
        _, v_in = uv(1j * 0.995 * c.B, p, lam)
        _, v_out = uv(1j * 1.005 * c.B, p, lam)
        ok = ok and v_in < 0.0 and v_out > 0.0
        for zc in (c.zeta_plus, c.zeta_minus):
            resid = abs(a * zc / sqrt_branch(complex(zc), p) + lam)
            worst = max(worst, resid / 1e-10)
    return CriterionResult(
        9, "level-set-ellipse", ok and worst <= 1.0, worst, "<= 1 (normalized), signs flip"
    )


def c10_sign_dichotomy(quick: bool, seed: int) -> CriterionResult:
    combos = AB_DENSITY_QUICK if quick else AB_DENSITY
    angles = 2.0 * np.pi * (np.arange(64) + 0.5) / 64.0
    bad = 0
    total = 0
    for a, b in combos:
        p = Params(a, b)
        lam = -0.5 * p.sqrt_a
        h = math.sqrt(b / a)
        for radius, inner in ((1e-6, True), (1e3 * (1.0 + h), False)):
            zs = radius * np.exp(1j * angles)
            _, v = uv(zs, p, lam)
            expected = -np.sign(np.sin(angles)) if inner else np.sign(np.sin(angles))
            bad += int(np.sum(np.sign(v) != expected))
            total += len(angles)
    frac = 1.0 - bad / total
    return CriterionResult(10, "sign-dichotomy", bad == 0, frac, "all signs exact")


def c11_taylor_routes(quick: bool, seed: int) -> CriterionResult:
    a_vals = (1.0,) if quick else (0.5, 1.0, 4.0)
    t_vals = (1.0,) if quick else (0.5, 1.0, 2.0)
    worst = 0.0
    for a in a_vals:
        eta = math.sqrt(a)
        for t in t_vals:
            for k in range(0, 7):
                routes = [taylor_mod.phi_k_integral(k, t, a, 64)]
                if k >= 1:
                    routes.append(taylor_mod.phi_k_bessel(k, t, a))
                routes.append(taylor_mod.psi_k_recursion(k, t, eta, 25) * a ** (-k))
                tol = 1e-8 * (1.0 + abs(routes[0]))
                spread = max(routes) - min(routes)
                worst = max(worst, spread / tol)
    p = Params(1.0, 1.0)
    resum = taylor_mod.phi_from_taylor(1.0, p, 12)
    worst = max(worst, abs(resum.value - phi(1.0, p)) / 1e-9)
    return CriterionResult(11, "taylor-three-routes", worst <= 1.0, worst, "<= 1 (normalized)")


def c12_derivative_series(quick: bool, seed: int) -> CriterionResult:
    cases = ((1.0, 1.0), (0.7, 1.3))
    worst = 0.0
    for t, eta in cases:
        for xi in (0.0, 0.25, 0.5):
            got = taylor_mod.phi_xi_derivative_series(1, t, eta, xi, 8)
            root = math.sqrt(t * t + xi)
            closed = 0.5 * eta * math.sinh(eta * root) / root
            worst = max(worst, abs(got - closed))
    return CriterionResult(12, "derivative-series", worst < 1e-8, worst, "< 1e-8 abs")


def c13_product_identity(quick: bool, seed: int) -> CriterionResult:
    worst = 0.0
    for i in range(5):
        radius = 1.0 + i
        for j in range(5):
            z = radius * np.exp(2j * np.pi * (j + 0.37) / 5.0)
            lhs, rhs = product_identity_lhs_rhs(complex(z), 40)
            worst = max(worst, abs(lhs - rhs))
    return CriterionResult(13, "product-identity", worst < 1e-12, worst, "< 1e-12 abs")


def c14_exp_convexity(quick: bool, seed: int) -> CriterionResult:
    combos = AB_CONVEX_QUICK if quick else AB_CONVEX
    trials = 30 if quick else 200
    worst = math.inf
    ok = True
    batteries: list[Callable] = []
    for a, b in combos:
        p = Params(a, b)
        batteries.append(lambda ts, p=p: phi(ts, p))
        batteries.append(lambda ts, p=p: psi_sinc(ts, p))
    a_vals = (1.0,) if quick else (0.5, 1.0, 4.0)
    for a in a_vals:
        for k in range(0, 5):
            batteries.append(lambda ts, k=k, a=a: taylor_mod.phi_k_integral(k, ts, a, 48))
    for i, f in enumerate(batteries):
        res = check_exp_convex(f, trials=trials, N_max=8, t_range=3.0, seed=seed + 1000 * i)
        worst = min(worst, res.worst_min_eigenvalue)
        ok = ok and res.passed
    return CriterionResult(
        14, "exponential-convexity", ok and worst >= -1e-10, worst, ">= -1e-10 normalized"
    )


def c15_closure_properties(quick: bool, seed: int) -> CriterionResult:
    res = closure_property_suite(seed)
    return CriterionResult(
        15, "closure-properties", res.passed, res.worst_min_eigenvalue, ">= -1e-10 normalized"
    )


def c16_two_point_inequality(quick: bool, seed: int) -> CriterionResult:
    n_pairs = 200 if quick else 1000
    p = Params(1.0, 1.0)
    stream = UniformStream(seed)
    worst = math.inf
    for f in (lambda t: phi(t, p), lambda t: psi_sinc(t, p)):
        for _ in range(n_pairs):
            t1 = -3.0 + 6.0 * stream.next()
            t2 = -3.0 + 6.0 * stream.next()
            resid = two_point_inequality(f, t1, t2)
            scale = max(abs(f(2 * t1)), abs(f(2 * t2)), abs(f(t1 + t2)))
            worst = min(worst, resid / scale)
    return CriterionResult(
        16, "two-point-inequality", worst >= -1e-12, worst, ">= -1e-12 normalized"
    )


def _seeded_hermitian(stream: UniformStream) -> bmv_mod.Hermitian2:
    draw = lambda: -2.0 + 4.0 * stream.next()
    return bmv_mod.Hermitian2(h11=draw(), h22=draw(), h12=complex(draw(), draw()))


def c17_bmv_reduction(quick: bool, seed: int) -> CriterionResult:
    n_pairs = 8 if quick else 50
    trials = 20 if quick else 40
    stream = UniformStream(seed)
    grid = np.arange(-3.0, 3.01, 0.5)
    pairs = [
        (bmv_mod.Hermitian2(1.0, -1.0, 0j), bmv_mod.Hermitian2(0.0, 0.0, 1.0 + 0j)),
        (bmv_mod.Hermitian2(1.0, -1.0, 0j), bmv_mod.Hermitian2(0.0, 0.0, 0j)),
        (bmv_mod.Hermitian2(1.0, 1.0, 0j), bmv_mod.Hermitian2(0.5, -0.25, 0.3 + 0.7j)),
    ]
    pairs += [(_seeded_hermitian(stream), _seeded_hermitian(stream)) for _ in range(n_pairs)]
    worst = 0.0
    ok = True
    for i, (A, B) in enumerate(pairs):
        worst = max(worst, bmv_mod.verify_reduction(A, B, grid) / 1e-10)
        res = bmv_mod.bmv_convexity_check(A, B, seed=seed + 77 * i, trials=trials, N_max=6)
        ok = ok and res.passed
    return CriterionResult(
        17, "bmv-2x2-reduction", ok and worst <= 1.0, worst, "<= 1 (normalized), psd"
    )


def c18_output_determinism(quick: bool, seed: int) -> CriterionResult:
    def render() -> str:
        p = Params(1.0, 1.0)
        prof = density_mod.density_profile(p, 9, DensityMethod.SERIES)
        res = check_exp_convex(lambda ts: phi(ts, p), trials=10, N_max=6, t_range=3.0, seed=seed)
        m = laplace_mod.representing_measure(p, 17)
        return density_csv(prof) + gram_json(res.worst_report) + measure_json(m)

    identical = render() == render()
    return CriterionResult(
        18, "output-determinism", identical, 1.0 if identical else 0.0, "byte-identical"
    )


CRITERIA = [
    c01_endpoint_identity,
    c02_four_method_agreement,
    c03_positivity,
    c04_reconstruction,
    c05_total_mass,
    c06_fourier_identity,
    c07_tail_asymptotic,
    c08_branch_correctness,
    c09_level_set_ellipse,
    c10_sign_dichotomy,
    c11_taylor_routes,
    c12_derivative_series,
    c13_product_identity,
    c14_exp_convexity,
    c15_closure_properties,
    c16_two_point_inequality,
    c17_bmv_reduction,
    c18_output_determinism,
]


def run_battery(quick: bool = False, seed: int = 42) -> list[CriterionResult]:
    return [criterion(quick, seed) for criterion in CRITERIA]


def format_report(results: list[CriterionResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{status} {r.cid:02d} {r.name:<26} measured={r.measured:.6e}  limit: {r.limit}"
        )
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} criteria passed")
    return "\n".join(lines) + "\n"
