"""Pure-numpy fallback for the hot kernels.

Same contracts as ``_kernels_numba``: series evaluated by term recurrence
with the same cutoffs, arrays handled by vectorized recurrences instead of
per-element jitted loops, and the symmetric eigensolve delegated to LAPACK.
"""
import math

import numpy as np

_SERIES_CUTOFF = -49.0
_TERM_EPS = 1e-17
_MAX_TERMS = 800


def cosh_sqrt_real(x):
    if x < _SERIES_CUTOFF:
        return math.cos(math.sqrt(-x))
    term = 1.0
    total = 1.0
    for k in range(1, _MAX_TERMS):
        term = term * x / ((2.0 * k - 1.0) * (2.0 * k))
        total += term
        if abs(term) <= _TERM_EPS * max(1.0, abs(total)):
            break
    return total


def sinch_sqrt_real(x):
    if x < _SERIES_CUTOFF:
        r = math.sqrt(-x)
        return math.sin(r) / r
    term = 1.0
    total = 1.0
    for k in range(1, _MAX_TERMS):
        term = term * x / ((2.0 * k) * (2.0 * k + 1.0))
        total += term
        if abs(term) <= _TERM_EPS * max(1.0, abs(total)):
            break
    return total


def _series_arr(z, denom):
    """Vectorized sum of z^k / prod(denom(1..k)) with term recurrence."""
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(1, _MAX_TERMS):
        term = term * z / denom(k)
        total += term
        bound = max(1.0, float(np.max(np.abs(total))))
        if float(np.max(np.abs(term))) <= _TERM_EPS * bound:
            break
    return total


def cosh_sqrt_real_arr(z):
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    trig = z < _SERIES_CUTOFF
    if trig.any():
        r = np.sqrt(-z[trig])
        out[trig] = np.cos(r)
    rest = ~trig
    if rest.any():
        out[rest] = _series_arr(z[rest], lambda k: (2.0 * k - 1.0) * (2.0 * k))
    return out


def sinch_sqrt_real_arr(z):
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    trig = z < _SERIES_CUTOFF
    if trig.any():
        r = np.sqrt(-z[trig])
        out[trig] = np.sin(r) / r
    rest = ~trig
    if rest.any():
        out[rest] = _series_arr(z[rest], lambda k: (2.0 * k) * (2.0 * k + 1.0))
    return out


def bessel_i1_kern(x):
    term = 0.5 * x
    total = term
    q = 0.25 * x * x
    for k in range(1, _MAX_TERMS):
        term = term * q / (k * (k + 1.0))
        total += term
        if term <= _TERM_EPS * total:
            break
    return total


def density_series_kern(lam, a, b):
    x = max((a - lam * lam) * b / (4.0 * a), 0.0)
    term = 1.0
    total = 1.0
    for k in range(1, _MAX_TERMS):
        term = term * x / (k * (k + 1.0))
        total += term
        if term <= _TERM_EPS * total:
            break
    return b / (4.0 * math.sqrt(a)) * total


def density_series_arr(lams, a, b):
    lams = np.asarray(lams, dtype=np.float64)
    x = np.maximum((a - lams * lams) * b / (4.0 * a), 0.0)
    total = _series_arr(x, lambda k: k * (k + 1.0))
    return b / (4.0 * math.sqrt(a)) * total


def gl_nodes_weights(n):
    k = np.arange(1, n + 1, dtype=np.float64)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    dp = np.ones(n)
    for _ in range(100):
        p0 = np.ones(n)
        p1 = x.copy()
        for j in range(2, n + 1):
            p0, p1 = p1, ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    xs = 0.5 * (x - x[::-1])
    ws = 0.5 * (w + w[::-1])
    return xs[::-1].copy(), ws[::-1].copy()


def sym_eigvals(mat):
    return np.sort(np.linalg.eigvalsh(mat))
