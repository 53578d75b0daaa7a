"""The 2x2 Hermitian trace-exponential and its reduction to the cosh family.

For M = tA + B the two eigenvalues are tr(M)/2 +- sqrt(q) with

    q(t) = ((m11 - m22)/2)^2 + |m12|^2,

a nonnegative quadratic a t^2 + 2 c t + d in t.  Completing the square gives

    trace exp(tA + B) = 2 e^{mu t + nu} cosh(sqrt(a (t + shift)^2 + b))

with mu = tr(A)/2, nu = tr(B)/2, shift = c/a and b = d - c^2/a >= 0, so the
trace is, up to a positive exponential factor and a shift, exactly the
cosh(sqrt(...)) family.  The reduction is verified numerically rather than
assumed.
"""
import math
from dataclasses import dataclass

import numpy as np

from ._backend import cosh_sqrt_real, cosh_sqrt_real_arr
from .branch_geometry import Params
from .errors import ReductionError
from .expconvex_gram import CheckResult, check_exp_convex
from .specfun import phi

_CLAMP = 1e-12


@dataclass(frozen=True)
class Hermitian2:
    """2x2 Hermitian matrix: diagonal h11, h22 real, off-diagonal h12 (h21 = conj)."""

    h11: float
    h22: float
    h12: complex

    @property
    def trace(self) -> float:
        return self.h11 + self.h22

    @property
    def det(self) -> float:
        return self.h11 * self.h22 - abs(self.h12) ** 2

    @property
    def max_eigenvalue(self) -> float:
        half_gap = math.sqrt((0.5 * (self.h11 - self.h22)) ** 2 + abs(self.h12) ** 2)
        return 0.5 * self.trace + half_gap

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [[self.h11, self.h12], [np.conjugate(self.h12), self.h22]], dtype=np.complex128
        )


@dataclass(frozen=True)
class PhiReduction:
    a: float
    b: float
    shift: float
    mu: float
    nu: float

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "shift": self.shift, "mu": self.mu, "nu": self.nu}


def _gap_coeffs(A: Hermitian2, B: Hermitian2) -> tuple[float, float, float]:
    """q(t) = a t^2 + 2 c t + d from the cancellation-free half-gap form."""
    da = A.h11 - A.h22
    db = B.h11 - B.h22
    a = 0.25 * da * da + abs(A.h12) ** 2
    c = 0.25 * da * db + (A.h12 * np.conjugate(B.h12)).real
    d = 0.25 * db * db + abs(B.h12) ** 2
    return a, c, d


def trace_exp(t, A: Hermitian2, B: Hermitian2):
    """trace exp(tA + B), always positive."""
    scalar = np.ndim(t) == 0
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
    qa, qc, qd = _gap_coeffs(A, B)
    q = np.maximum(qa * ts * ts + 2.0 * qc * ts + qd, 0.0)
    tr_half = 0.5 * (A.trace * ts + B.trace)
    out = 2.0 * np.exp(tr_half) * cosh_sqrt_real_arr(q)
    return float(out[0]) if scalar else out


def log_trace_exp(t: float, A: Hermitian2, B: Hermitian2) -> float:
    """log trace exp(tA + B), stable for large |t| where the trace overflows."""
    t = float(t)
    qa, qc, qd = _gap_coeffs(A, B)
    root = math.sqrt(max(qa * t * t + 2.0 * qc * t + qd, 0.0))
    # 2 cosh(x) = e^x (1 + e^{-2x})
    return 0.5 * (A.trace * t + B.trace) + root + math.log1p(math.exp(-2.0 * root))


def reduce_to_phi(A: Hermitian2, B: Hermitian2) -> PhiReduction:
    """Parameters (a, b, shift, mu, nu) of the cosh-family form of the trace."""
    qa, qc, qd = _gap_coeffs(A, B)
    mu = 0.5 * A.trace
    nu = 0.5 * B.trace
    if qa < 1e-14:
        if abs(qc) > 1e-10:
            raise ReductionError(
                f"degenerate reduction: a = {qa} but cross coefficient c = {qc} is nonzero"
            )
        return PhiReduction(a=0.0, b=float(qd), shift=0.0, mu=float(mu), nu=float(nu))
    b = qd - qc * qc / qa
    if b < 0.0:
        if b < -_CLAMP:
            raise ReductionError(f"negative completed-square constant b = {b}")
        b = 0.0
    return PhiReduction(
        a=float(qa), b=float(b), shift=float(qc / qa), mu=float(mu), nu=float(nu)
    )


def verify_reduction(A: Hermitian2, B: Hermitian2, t_grid) -> float:
    """Max relative mismatch of trace_exp against its reduced cosh form."""
    red = reduce_to_phi(A, B)
    ts = np.asarray(t_grid, dtype=np.float64)
    direct = trace_exp(ts, A, B)
    factor = 2.0 * np.exp(red.mu * ts + red.nu)
    if red.a == 0.0:
        reduced = factor * cosh_sqrt_real(red.b)
    else:
        reduced = factor * phi(ts + red.shift, Params(a=red.a, b=red.b))
    return float(np.max(np.abs(direct - reduced) / (1.0 + direct)))


def bmv_convexity_check(
    A: Hermitian2, B: Hermitian2, seed: int, trials: int = 100, N_max: int = 8, t_range: float = 3.0
) -> CheckResult:
    """PSD battery for t -> trace exp(tA + B); expected to pass for every pair."""
    return check_exp_convex(
        lambda t: trace_exp(t, A, B), trials=trials, N_max=N_max, t_range=t_range, seed=seed
    )
