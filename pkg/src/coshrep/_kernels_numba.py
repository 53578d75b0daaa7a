"""JIT-compiled hot kernels.

Loop-style implementations of the series evaluations, Gauss-Legendre
Newton iteration and the cyclic Jacobi eigensolver.  Mirrors
``_kernels_numpy`` one-to-one; ``_backend`` picks one of the two.
"""
import math

import numpy as np
from numba import njit

# Switch from the entire power series to the trig form once the series
# would lose more than ~3 digits to cancellation (|z| beyond this, z < 0).
_SERIES_CUTOFF = -49.0
_TERM_EPS = 1e-17
_MAX_TERMS = 800


@njit(cache=True)
def cosh_sqrt_real(x):
    # cosh(sqrt(x)) continued to all real x: sum x^k/(2k)!
    if x < _SERIES_CUTOFF:
        return math.cos(math.sqrt(-x))
    term = 1.0
    total = 1.0
    for k in range(1, _MAX_TERMS):
        term = term * x / ((2.0 * k - 1.0) * (2.0 * k))
        total += term
        bound = abs(total) if abs(total) > 1.0 else 1.0
        if abs(term) <= _TERM_EPS * bound:
            break
    return total


@njit(cache=True)
def sinch_sqrt_real(x):
    # sinh(sqrt(x))/sqrt(x) continued to all real x: sum x^k/(2k+1)!
    if x < _SERIES_CUTOFF:
        r = math.sqrt(-x)
        return math.sin(r) / r
    term = 1.0
    total = 1.0
    for k in range(1, _MAX_TERMS):
        term = term * x / ((2.0 * k) * (2.0 * k + 1.0))
        total += term
        bound = abs(total) if abs(total) > 1.0 else 1.0
        if abs(term) <= _TERM_EPS * bound:
            break
    return total


@njit(cache=True)
def cosh_sqrt_real_arr(z):
    out = np.empty_like(z)
    for i in range(z.size):
        out[i] = cosh_sqrt_real(z[i])
    return out


@njit(cache=True)
def sinch_sqrt_real_arr(z):
    out = np.empty_like(z)
    for i in range(z.size):
        out[i] = sinch_sqrt_real(z[i])
    return out


@njit(cache=True)
def bessel_i1_kern(x):
    # I_1(x) = sum_k (x/2)^(2k+1) / (k! (k+1)!), x >= 0
    term = 0.5 * x
    total = term
    q = 0.25 * x * x
    for k in range(1, _MAX_TERMS):
        term = term * q / (k * (k + 1.0))
        total += term
        if term <= _TERM_EPS * total:
            break
    return total


@njit(cache=True)
def density_series_kern(lam, a, b):
    # (b/(4 sqrt a)) * sum_k ((a-lam^2) b / (4a))^k / (k! (k+1)!)
    x = (a - lam * lam) * b / (4.0 * a)
    if x < 0.0:
        x = 0.0
    term = 1.0
    total = 1.0
    for k in range(1, _MAX_TERMS):
        term = term * x / (k * (k + 1.0))
        total += term
        if term <= _TERM_EPS * total:
            break
    return b / (4.0 * math.sqrt(a)) * total


@njit(cache=True)
def density_series_arr(lams, a, b):
    out = np.empty_like(lams)
    for i in range(lams.size):
        out[i] = density_series_kern(lams[i], a, b)
    return out


@njit(cache=True)
def gl_nodes_weights(n):
    # Newton iteration on P_n from the Chebyshev-like asymptotic guesses.
    k = np.arange(1, n + 1).astype(np.float64)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    dp = np.ones(n)
    for _ in range(100):
        p0 = np.ones(n)
        p1 = x.copy()
        for j in range(2, n + 1):
            p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j
            p0 = p1
            p1 = p2
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # enforce exact symmetry, return ascending
    xs = 0.5 * (x - x[::-1])
    ws = 0.5 * (w + w[::-1])
    return xs[::-1].copy(), ws[::-1].copy()


@njit(cache=True)
def sym_eigvals(mat):
    # Cyclic Jacobi sweeps; eigenvalues ascending.
    n = mat.shape[0]
    A = mat.copy()
    scale = 0.0
    for i in range(n):
        for j in range(n):
            if abs(A[i, j]) > scale:
                scale = abs(A[i, j])
    if scale == 0.0 or n == 1:
        return np.sort(np.diag(A).copy())
    for _ in range(60):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += A[i, j] * A[i, j]
        if math.sqrt(2.0 * off) <= 1e-14 * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app = A[p, p]
                aqq = A[q, q]
                for i in range(n):
                    if i != p and i != q:
                        aip = A[i, p]
                        aiq = A[i, q]
                        A[i, p] = aip * c - aiq * s
                        A[p, i] = A[i, p]
                        A[i, q] = aiq * c + aip * s
                        A[q, i] = A[i, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
    return np.sort(np.diag(A).copy())
