"""Special-function kernels.

Everything here is an entire function evaluated by power series with
term-ratio stopping, so no branch cuts appear.  The one exception is the
large-argument regime where the series for cosh(sqrt(z)) would cancel
catastrophically; there the value is obtained from cosh composed with the
principal square root, which is safe because cosh is even.
"""
import cmath
import math

import numpy as np

from ._backend import (
    bessel_i1_kern,
    cosh_sqrt_real,
    cosh_sqrt_real_arr,
    sinch_sqrt_real,
    sinch_sqrt_real_arr,
)
from .branch_geometry import Params
from .errors import DomainError, NonFiniteError

_TERM_EPS = 1e-17

BESSEL_OVERFLOW_X = 700.0


def _cosh_sqrt_complex(z: complex) -> complex:
    w = cmath.sqrt(z)
    # digits lost to cancellation ~ 0.43*(sqrt|z| - Re sqrt(z))
    if abs(z) <= 400.0 and math.sqrt(abs(z)) - w.real <= 7.0:
        term = 1.0 + 0.0j
        total = 1.0 + 0.0j
        for k in range(1, 400):
            term = term * z / ((2.0 * k - 1.0) * (2.0 * k))
            total += term
            if abs(term) <= _TERM_EPS * max(1.0, abs(total)):
                break
        return total
    return cmath.cosh(w)


def _is_complex(z) -> bool:
    return isinstance(z, (complex, np.complexfloating)) or (
        isinstance(z, np.ndarray) and np.iscomplexobj(z)
    )


def cosh_sqrt(z):
    """The entire function zeta -> cosh(sqrt(zeta)); accepts real or complex."""
    if isinstance(z, np.ndarray) and z.ndim > 0:
        if np.iscomplexobj(z):
            return np.array([_cosh_sqrt_complex(complex(v)) for v in z.ravel()]).reshape(z.shape)
        if not np.all(np.isfinite(z)):
            raise NonFiniteError("cosh_sqrt: non-finite input")
        return cosh_sqrt_real_arr(np.asarray(z, dtype=np.float64))
    if _is_complex(z):
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise NonFiniteError(f"cosh_sqrt: non-finite input {z!r}")
        return _cosh_sqrt_complex(z)
    x = float(z)
    if not math.isfinite(x):
        raise NonFiniteError(f"cosh_sqrt: non-finite input {z!r}")
    return cosh_sqrt_real(x)


def phi(t, p: Params):
    """cosh(sqrt(a t^2 + b)); real and >= 1 for real t."""
    if _is_complex(t):
        return cosh_sqrt(p.a * t * t + p.b)
    if np.ndim(t) == 0:
        t = float(t)
        if not math.isfinite(t):
            raise NonFiniteError(f"phi: non-finite input {t!r}")
        return cosh_sqrt_real(p.a * t * t + p.b)
    ts = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(ts)):
        raise NonFiniteError("phi: non-finite input")
    return cosh_sqrt_real_arr(p.a * ts * ts + p.b)


def psi_sinc(t, p: Params):
    """sinh(sqrt(a t^2 + b)) / sqrt(a t^2 + b) with the limit 1 at the origin."""
    if np.ndim(t) == 0:
        t = float(t)
        if not math.isfinite(t):
            raise NonFiniteError(f"psi_sinc: non-finite input {t!r}")
        return sinch_sqrt_real(p.a * t * t + p.b)
    ts = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(ts)):
        raise NonFiniteError("psi_sinc: non-finite input")
    return sinch_sqrt_real_arr(p.a * ts * ts + p.b)


def bessel_i1(x: float) -> float:
    """Modified Bessel I_1 by its ascending series; domain [0, 700]."""
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteError(f"bessel_i1: non-finite input {x!r}")
    if x < 0.0:
        raise DomainError(f"bessel_i1: need x >= 0, got {x}")
    if x > BESSEL_OVERFLOW_X:
        raise OverflowError(f"bessel_i1: x={x} exceeds the overflow guard {BESSEL_OVERFLOW_X}")
    return bessel_i1_kern(x)


def _bessel_i_half_series(nu: float, x: float) -> float:
    # I_nu(x) = sum_j (x/2)^(nu+2j) / (j! Gamma(nu+j+1)), all terms positive
    term = math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0))
    total = term
    q = 0.25 * x * x
    for j in range(1, 600):
        term *= q / (j * (nu + j))
        total += term
        if term <= _TERM_EPS * total:
            break
    return total


def bessel_i_half(k: int, x: float) -> float:
    """I_{k-1/2}(x) for integer k >= 1, x > 0.

    Upward recurrence from the closed I_{-1/2}, I_{1/2}; the recurrence
    result is cross-checked against the direct series at the final order
    and replaced by it when more than 6 digits were lost.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise DomainError(f"bessel_i_half: need integer k >= 1, got {k!r}")
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_i_half: need x > 0, got {x!r}")
    if x > BESSEL_OVERFLOW_X:
        raise OverflowError(f"bessel_i_half: x={x} exceeds the overflow guard {BESSEL_OVERFLOW_X}")
    pref = math.sqrt(2.0 / (math.pi * x))
    i_minus = pref * math.cosh(x)   # I_{-1/2}
    i_curr = pref * math.sinh(x)    # I_{+1/2}
    nu = 0.5
    for _ in range(k - 1):
        i_minus, i_curr = i_curr, i_minus - (2.0 * nu / x) * i_curr
        nu += 1.0
    # recurrence in increasing order is unstable for x << nu; fall back to the
    # series once more than 6 of the ~16 digits are gone
    series = _bessel_i_half_series(k - 0.5, x)
    if abs(i_curr - series) > 1e-10 * abs(series):
        return series
    return i_curr


def product_identity_lhs_rhs(z, M: int):
    """(sinh z / z, prod_{m<=M} cosh(z / 2^m)); the two agree as M grows."""
    if not isinstance(M, (int, np.integer)) or isinstance(M, bool) or M < 1:
        raise DomainError(f"product identity: need integer M >= 1, got {M!r}")
    z = complex(z)
    if z == 0:
        lhs = complex(1.0)
    else:
        lhs = cmath.sinh(z) / z
    rhs = complex(1.0)
    for m in range(1, M + 1):
        rhs *= cmath.cosh(z / 2.0 ** m)
    return lhs, rhs
