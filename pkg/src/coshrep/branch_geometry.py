"""Branch of sqrt(a zeta^2 + b) on the slit plane and its level-set geometry.

The slit S is the vertical segment [-i sqrt(b/a), +i sqrt(b/a)].  The branch
is realized by the closed formula

    w(zeta) = sqrt(a) * zeta * principal_sqrt(1 + b / (a zeta^2)),

which is single-valued off S, behaves like sqrt(a) zeta at infinity and takes
the boundary values +sqrt(b - a eta^2) on the right edge of the slit and the
negated value on the left edge.  On top of w sit the harmonic pair
(u, v) = (Re, Im)(w + lambda zeta) and the level-set ellipse on which v = 0.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BranchCutError,
    DegenerateSlitError,
    DomainError,
    SpectralRangeError,
)

SLIT_PROXIMITY = 1e-12


@dataclass(frozen=True)
class Params:
    """Parameter pair (a, b) with a > 0, b >= 0."""

    a: float
    b: float

    def __post_init__(self):
        a = float(self.a)
        b = float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"parameters must be finite, got a={self.a!r}, b={self.b!r}")
        if a <= 0.0:
            raise DomainError(f"a must be positive, got {a}")
        if b < 0.0:
            raise DomainError(f"b must be nonnegative, got {b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def sqrt_a(self) -> float:
        return math.sqrt(self.a)


@dataclass(frozen=True)
class Slit:
    """Vertical branch segment; degenerates to the origin when b = 0."""

    half_height: float

    @classmethod
    def from_params(cls, p: Params) -> "Slit":
        return cls(half_height=math.sqrt(p.b / p.a))


@dataclass(frozen=True)
class EllipseContour:
    """Level-set ellipse of v with semiaxes A < B and critical points +-A."""

    lam: float
    A: float
    B: float
    zeta_plus: float
    zeta_minus: float


def slit_distance(zeta, half_height: float):
    """Euclidean distance from zeta to the closed slit segment."""
    z = np.asarray(zeta, dtype=np.complex128)
    xi = z.real
    eta = z.imag
    overhang = np.maximum(np.abs(eta) - half_height, 0.0)
    return np.hypot(xi, overhang)


def sqrt_branch(zeta, p: Params):
    """The branch of sqrt(a zeta^2 + b), positive for large real zeta."""
    if p.b == 0.0:
        raise DegenerateSlitError("b = 0: slit degenerates; use sqrt(a)*zeta directly")
    z = np.asarray(zeta, dtype=np.complex128)
    h = math.sqrt(p.b / p.a)
    dist = slit_distance(z, h)
    if np.min(dist) <= SLIT_PROXIMITY:
        bad = complex(z.flat[int(np.argmin(dist))])
        raise BranchCutError(f"zeta={bad!r} is within {SLIT_PROXIMITY} of the slit")
    w = math.sqrt(p.a) * z * np.sqrt(1.0 + p.b / (p.a * z * z))
    if np.isscalar(zeta) or np.ndim(zeta) == 0:
        return complex(w)
    return w


def uv(zeta, p: Params, lam: float):
    """Real and imaginary parts of w(zeta) + lambda*zeta."""
    g = sqrt_branch(zeta, p) + float(lam) * np.asarray(zeta, dtype=np.complex128)
    if np.ndim(g) == 0:
        g = complex(g)
        return g.real, g.imag
    return g.real, g.imag


def rho(zeta, p: Params):
    """b / |w(zeta) + sqrt(a) zeta|^2; tends to 0 at infinity, 1 at the origin."""
    z = np.asarray(zeta, dtype=np.complex128)
    denom = np.abs(sqrt_branch(zeta, p) + math.sqrt(p.a) * z) ** 2
    out = p.b / denom
    if np.ndim(zeta) == 0 or np.isscalar(zeta):
        return float(out)
    return out


def ellipse_for(lam: float, p: Params) -> EllipseContour:
    """Level-set ellipse of v for lambda in (-sqrt(a), 0); encloses the slit."""
    if p.b == 0.0:
        raise DegenerateSlitError("b = 0: no ellipse, the slit is a point")
    lam = float(lam)
    sa = p.sqrt_a
    if not (-sa < lam < 0.0):
        raise SpectralRangeError(f"lambda must lie in (-sqrt(a), 0) = (-{sa}, 0), got {lam}")
    h = math.sqrt(p.b / p.a)
    stretch = 1.0 / math.sqrt(1.0 - lam * lam / p.a)
    A = h * (abs(lam) / sa) * stretch
    B = h * stretch
    return EllipseContour(lam=lam, A=A, B=B, zeta_plus=A, zeta_minus=-A)


def ellipse_point(c: EllipseContour, theta):
    """Point A cos(theta) + i B sin(theta) on the contour."""
    th = np.asarray(theta, dtype=np.float64)
    z = c.A * np.cos(th) + 1j * c.B * np.sin(th)
    if np.ndim(theta) == 0:
        return complex(z)
    return z


def verify_level_set(c: EllipseContour, p: Params, n_samples: int) -> float:
    """Max |v| over the contour, skipping the critical-point angles 0 and pi."""
    if n_samples < 4:
        raise DomainError(f"need at least 4 samples, got {n_samples}")
    theta = 2.0 * np.pi * np.arange(n_samples) / n_samples
    keep = (np.abs(theta) > 1e-3) & (np.abs(theta - np.pi) > 1e-3) & (np.abs(theta - 2 * np.pi) > 1e-3)
    pts = ellipse_point(c, theta[keep])
    _, v = uv(pts, p, c.lam)
    return float(np.max(np.abs(v)))
