"""The representing density on [-sqrt(a), sqrt(a)], by four independent routes.

* series: the explicit entire series, the designated reference
* bessel: the closed form through I_1
* sinh_quadrature: the slit-collapsed integral, Gauss-Legendre after the
  tau = sin(sigma) substitution that removes the endpoint root singularity
* contour_ellipse: the level-set contour integral, periodic trapezoid

All four must agree; the cross-method comparison is the point of having them.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from ._backend import bessel_i1_kern, density_series_arr, density_series_kern
from .branch_geometry import Params, ellipse_for, ellipse_point, uv
from .errors import (
    DegenerateSlitError,
    InvalidOrderError,
    InvariantError,
    NonFiniteError,
    SpectralRangeError,
)
from .quadrature import gauss_legendre


class DensityMethod(str, enum.Enum):
    SERIES = "series"
    BESSEL = "bessel"
    SINH_QUADRATURE = "sinh_quadrature"
    CONTOUR_ELLIPSE = "contour_ellipse"


@dataclass(frozen=True)
class DensityProfile:
    params: Params
    lambdas: np.ndarray
    values: np.ndarray
    method: DensityMethod

    def to_dict(self) -> dict:
        return {
            "lambdas": [float(x) for x in self.lambdas],
            "values": [float(x) for x in self.values],
            "method": self.method.value,
        }


def _check_lambda(lam: float, p: Params) -> float:
    lam = float(lam)
    if not math.isfinite(lam) or abs(lam) > p.sqrt_a * (1.0 + 1e-12):
        raise SpectralRangeError(f"lambda must satisfy |lambda| <= sqrt(a) = {p.sqrt_a}, got {lam}")
    return lam


def endpoint_value(p: Params) -> float:
    """Density value at lambda = +-sqrt(a): b / (4 sqrt(a))."""
    return p.b / (4.0 * p.sqrt_a)


def density_series(lam: float, p: Params) -> float:
    lam = _check_lambda(lam, p)
    return density_series_kern(lam, p.a, p.b)


def density_bessel(lam: float, p: Params) -> float:
    """Closed form sqrt(b)/(2 sqrt(a-lam^2)) * I_1(sqrt((a-lam^2) b / a)).

    Returns 0 for b = 0 by convention.  Near the endpoints (a - lam^2 below
    1e-8) the 0/0 form is replaced by the series, whose k = 0 term carries
    the analytic limit b/(4 sqrt(a)).
    """
    lam = _check_lambda(lam, p)
    if p.b == 0.0:
        return 0.0
    gap = p.a - lam * lam
    if gap < 1e-8:
        return density_series(lam, p)
    return math.sqrt(p.b) / (2.0 * math.sqrt(gap)) * bessel_i1_kern(math.sqrt(gap * p.b / p.a))


def density_sinh_quadrature(lam: float, p: Params, n: int) -> float:
    """Slit-collapsed integral, evaluated as

        (1/pi) sqrt(b/a) * int_0^{pi/2} sinh(sqrt(b) cos s) cos(lam sqrt(b/a) sin s) cos s ds

    after tau = sin(s), which keeps the integrand entire.  Returns 0 for b = 0.
    """
    lam = _check_lambda(lam, p)
    if n < 8:
        raise InvalidOrderError(f"density_sinh_quadrature: need n >= 8, got {n}")
    if p.b == 0.0:
        return 0.0
    rule = gauss_legendre(n)
    half = 0.25 * math.pi
    s = half + half * rule.nodes
    sb = math.sqrt(p.b)
    freq = lam * math.sqrt(p.b / p.a)
    vals = np.sinh(sb * np.cos(s)) * np.cos(freq * np.sin(s)) * np.cos(s)
    return math.sqrt(p.b / p.a) / math.pi * half * float(np.dot(rule.weights, vals))


def density_contour_ellipse(lam: float, p: Params, n: int) -> float:
    """Level-set contour integral -(1/4pi) oint e^{-u} dy over the ellipse.

    Proved for lambda in (-sqrt(a), 0); lambda > 0 is served by evenness and
    lambda = 0, where the ellipse degenerates onto the slit, falls back to
    the series value.  The closed smooth contour makes the n-point periodic
    trapezoid spectrally accurate.
    """
    lam = _check_lambda(lam, p)
    if p.b == 0.0:
        raise DegenerateSlitError("b = 0: no contour around a degenerate slit")
    if abs(lam) >= p.sqrt_a * (1.0 - 1e-12):
        raise SpectralRangeError(f"contour method needs |lambda| < sqrt(a) = {p.sqrt_a}, got {lam}")
    if n < 4:
        raise InvalidOrderError(f"density_contour_ellipse: need n >= 4, got {n}")
    if abs(lam) < 1e-12 * p.sqrt_a:
        return density_series(lam, p)
    lam_w = -abs(lam)
    c = ellipse_for(lam_w, p)
    theta = 2.0 * np.pi * np.arange(n) / n
    pts = ellipse_point(c, theta)
    u, _ = uv(pts, p, lam_w)
    # dy = B cos(theta) dtheta, trapezoid weight 2 pi / n
    total = float(np.dot(np.exp(-u), c.B * np.cos(theta))) * (2.0 * np.pi / n)
    return -total / (4.0 * np.pi)


_DEFAULT_QUAD_N = 128
_DEFAULT_CONTOUR_N = 512


def density_profile(p: Params, n_lambda: int, method: DensityMethod, n: int | None = None) -> DensityProfile:
    """Evaluate the chosen method on the inclusive uniform grid of n_lambda points.

    For the contour method the grid endpoints take the analytic limit
    b/(4 sqrt(a)) and lambda = 0 the series value (the contour exists only
    for 0 < |lambda| < sqrt(a)).
    """
    if n_lambda < 3:
        raise InvalidOrderError(f"density_profile: need n_lambda >= 3, got {n_lambda}")
    method = DensityMethod(method)
    sa = p.sqrt_a
    lams = np.linspace(-sa, sa, n_lambda)
    if method is DensityMethod.SERIES:
        vals = density_series_arr(lams, p.a, p.b)
    elif method is DensityMethod.BESSEL:
        vals = np.array([density_bessel(l, p) for l in lams])
    elif method is DensityMethod.SINH_QUADRATURE:
        nn = _DEFAULT_QUAD_N if n is None else n
        vals = np.array([density_sinh_quadrature(l, p, nn) for l in lams])
    else:
        nn = _DEFAULT_CONTOUR_N if n is None else n
        vals = np.empty_like(lams)
        for i, l in enumerate(lams):
            if abs(l) >= sa * (1.0 - 1e-12):
                vals[i] = endpoint_value(p)
            else:
                vals[i] = density_contour_ellipse(l, p, nn)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteError(f"density_profile: non-finite value in {method.value} profile")
    mirrored = vals[::-1]
    if float(np.max(np.abs(vals - mirrored))) > 1e-10:
        raise InvariantError(f"density_profile: evenness violated for {method.value}")
    if p.b > 0.0 and float(np.min(vals[1:-1])) <= 0.0:
        raise InvariantError(f"density_profile: interior positivity violated for {method.value}")
    vals.setflags(write=False)
    lams.setflags(write=False)
    return DensityProfile(params=p, lambdas=lams, values=vals, method=method)
