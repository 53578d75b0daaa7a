"""Gram-matrix certification of exponential convexity.

For points t_1..t_N the matrix F[r, s] = f(t_r + t_s) must be positive
semidefinite for every choice of points; the finite PSD checks here
instantiate that universally quantified definition.  The verdict tolerance
is relative to max|F| because Gram entries of growing functions span many
decades.

Point sets are drawn from a fixed 64-bit linear congruential stream so that
runs are reproducible from the seed alone:

    x_{n+1} = (x_n * 6364136223846793005 + 1442695040888963407) mod 2^64,
    u = (x_{n+1} >> 11) * 2^-53,  mapped affinely into [-t_range, t_range].
"""
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._backend import sym_eigvals
from .errors import DomainError, InvariantError, NonFiniteError

LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407
_MASK = (1 << 64) - 1

DEFAULT_TOLERANCE = 1e-10
MAX_POINTS = 64


class UniformStream:
    """Deterministic uniforms in [0, 1) from the fixed 64-bit LCG."""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next(self) -> float:
        self.state = (self.state * LCG_MULT + LCG_INC) & _MASK
        return (self.state >> 11) * 2.0 ** -53

    def uniforms(self, count: int) -> np.ndarray:
        return np.array([self.next() for _ in range(count)])


def seeded_uniforms(seed: int, count: int) -> np.ndarray:
    return UniformStream(seed).uniforms(count)


@dataclass(frozen=True)
class GramReport:
    points: np.ndarray
    matrix: np.ndarray
    min_eigenvalue: float
    scale: float
    verdict: str
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "points": [float(x) for x in self.points],
            "matrix": [[float(x) for x in row] for row in self.matrix],
            "min_eigenvalue": self.min_eigenvalue,
            "scale": self.scale,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
        }


def _eval(f, xs: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(xs), dtype=np.float64)
        if vals.shape == xs.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([float(f(x)) for x in xs], dtype=np.float64)


def gram_matrix(f, points) -> np.ndarray:
    """F[r, s] = f(t_r + t_s), each unordered pair evaluated once."""
    ts = np.asarray(points, dtype=np.float64)
    if ts.ndim != 1 or not (1 <= ts.size <= MAX_POINTS):
        raise DomainError(f"need 1..{MAX_POINTS} points, got shape {ts.shape}")
    if not np.all(np.isfinite(ts)):
        raise NonFiniteError("points must be finite")
    r_idx, s_idx = np.triu_indices(ts.size)
    vals = _eval(f, ts[r_idx] + ts[s_idx])
    bad = ~np.isfinite(vals)
    if bad.any():
        i = int(np.argmax(bad))
        raise NonFiniteError(
            f"f(t_r + t_s) non-finite at (r, s) = ({r_idx[i]}, {s_idx[i]}): {vals[i]!r}"
        )
    m = np.zeros((ts.size, ts.size))
    m[r_idx, s_idx] = vals
    m[s_idx, r_idx] = vals
    return m


def psd_verdict(points, matrix: np.ndarray, tolerance: float = DEFAULT_TOLERANCE) -> GramReport:
    """Attach the minimum eigenvalue and the psd/not_psd verdict."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvariantError(f"matrix must be square, got shape {m.shape}")
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    if float(np.max(np.abs(m - m.T))) > 1e-14 * max(scale, 1.0):
        raise InvariantError("matrix is not symmetric")
    min_eig = float(sym_eigvals(m)[0])
    verdict = "psd" if min_eig >= -tolerance * scale else "not_psd"
    return GramReport(
        points=np.asarray(points, dtype=np.float64),
        matrix=m,
        min_eigenvalue=min_eig,
        scale=scale,
        verdict=verdict,
        tolerance=float(tolerance),
    )


class CheckResult(NamedTuple):
    passed: bool
    worst_min_eigenvalue: float
    worst_report: GramReport


def check_exp_convex(
    f,
    trials: int,
    N_max: int = 8,
    t_range: float = 3.0,
    seed: int = 42,
    tolerance: float = DEFAULT_TOLERANCE,
) -> CheckResult:
    """Seeded random Gram batteries; pass iff every trial is psd.

    Trial i uses 2 + (i mod (N_max - 1)) points drawn from the stream and
    mapped into [-t_range, t_range].  Reports the worst scale-normalized
    minimum eigenvalue over all trials.
    """
    if trials < 1:
        raise DomainError(f"need trials >= 1, got {trials}")
    if not (2 <= N_max <= 12):
        raise DomainError(f"need 2 <= N_max <= 12, got {N_max}")
    stream = UniformStream(seed)
    worst = math.inf
    worst_report = None
    passed = True
    for i in range(trials):
        n_pts = 2 + (i % (N_max - 1)) if N_max > 2 else 2
        pts = -t_range + 2.0 * t_range * stream.uniforms(n_pts)
        report = psd_verdict(pts, gram_matrix(f, pts), tolerance)
        normalized = report.min_eigenvalue / report.scale if report.scale > 0.0 else 0.0
        if normalized < worst:
            worst = normalized
            worst_report = report
        if report.verdict != "psd":
            passed = False
    return CheckResult(passed=passed, worst_min_eigenvalue=worst, worst_report=worst_report)


def two_point_inequality(f, t1: float, t2: float) -> float:
    """sqrt(f(2 t1) f(2 t2)) - f(t1 + t2); nonnegative for exponentially convex f."""
    v1 = float(f(2.0 * t1))
    v2 = float(f(2.0 * t2))
    if v1 < 0.0 or v2 < 0.0:
        raise DomainError(
            f"f takes negative values f(2 t1)={v1}, f(2 t2)={v2}; not exponentially convex"
        )
    return math.sqrt(v1 * v2) - float(f(t1 + t2))


class ClosureResult(NamedTuple):
    passed: bool
    worst_min_eigenvalue: float


def closure_property_suite(seed: int) -> ClosureResult:
    """Scaling, sum, product and pointwise-limit closure, PSD-certified.

    Uses f1 = cosh(1.3 t) and f2 = e^{0.7 t}; the limit case is the cosh(0.5 t)
    series truncated at 30 terms.
    """
    f1 = lambda t: np.cosh(1.3 * np.asarray(t, dtype=np.float64))
    f2 = lambda t: np.exp(0.7 * np.asarray(t, dtype=np.float64))

    def truncated_cosh(t):
        x = 0.5 * np.asarray(t, dtype=np.float64)
        total = np.ones_like(x)
        term = np.ones_like(x)
        for k in range(1, 31):
            term = term * x * x / ((2.0 * k - 1.0) * (2.0 * k))
            total = total + term
        return total

    candidates = [
        lambda t: 2.5 * f1(t),          # positive scaling
        lambda t: 0.0 * f1(t),          # zero scaling
        lambda t: f1(t) + f2(t),        # sum
        lambda t: f1(t) * f2(t),        # product
        truncated_cosh,                 # pointwise limit
    ]
    worst = math.inf
    passed = True
    for offset, g in enumerate(candidates):
        res = check_exp_convex(g, trials=60, N_max=6, t_range=3.0, seed=seed + offset)
        worst = min(worst, res.worst_min_eigenvalue)
        passed = passed and res.passed
    return ClosureResult(passed=passed, worst_min_eigenvalue=worst)
