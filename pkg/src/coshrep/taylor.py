"""Taylor coefficients of cosh(sqrt(a t^2 + b)) in b, three ways.

* the interval integral with the (a - l^2)^{k-1} kernel,
* the half-integer-Bessel closed form (t != 0),
* the product-identity recursion for the xi-derivatives psi_k, related to
  the b-coefficients by phi_k(t, a) = psi_k(t, sqrt(a)) a^{-k}.

The recursion sums over weak compositions: sequences l_1, l_2, ... of
nonnegative integers with sum k, finitely many nonzero.  Differentiating a
product k times carries the multinomial weight k!/prod(l_m!), and the tail
of all-zero positions has the closed value sinh(x)/x by the product
identity, so truncating the support at depth M is the only approximation.
"""
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from ._backend import cosh_sqrt_real, sinch_sqrt_real
from .branch_geometry import Params
from .errors import DepthGuardError, DomainError, InvalidOrderError
from .quadrature import gauss_legendre
from .specfun import bessel_i_half

MAX_K = 8
MIN_DEPTH = 20
MAX_DERIVATIVE_ORDER = 4


@dataclass(frozen=True)
class CompositionSequence:
    """Sparse weak composition: distinct positions m with parts l_m >= 1."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ms = [m for m, _ in self.entries]
        if ms != sorted(ms) or len(set(ms)) != len(ms):
            raise DomainError(f"positions must be distinct and sorted, got {ms}")
        if any(m < 1 or l < 1 for m, l in self.entries):
            raise DomainError(f"positions and parts must be >= 1, got {self.entries}")

    @property
    def k(self) -> int:
        return sum(l for _, l in self.entries)

    def multinomial_weight(self) -> int:
        """k! / prod(l_m!) -- the general-Leibniz weight of this sequence."""
        w = math.factorial(self.k)
        for _, l in self.entries:
            w //= math.factorial(l)
        return w


def compositions(k: int, m_max: int) -> Iterator[CompositionSequence]:
    """All weak compositions of k supported on positions 1..m_max."""
    def rec(rem, m):
        if rem == 0:
            yield ()
            return
        if m > m_max:
            return
        for l in range(rem + 1):
            for tail in rec(rem - l, m + 1):
                yield ((m, l),) + tail if l > 0 else tail
    for entries in rec(k, 1):
        yield CompositionSequence(entries=entries)


def phi_k_integral(k: int, t, a: float, n: int):
    """k-th Taylor coefficient via the interval integral; k = 0 is cosh(sqrt(a) t)."""
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 0:
        raise DomainError(f"phi_k_integral: need integer k >= 0, got {k!r}")
    if a <= 0.0 or not math.isfinite(a):
        raise DomainError(f"phi_k_integral: need a > 0, got {a!r}")
    scalar = np.ndim(t) == 0
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if k == 0:
        out = np.array([cosh_sqrt_real(a * x * x) for x in ts])
        return float(out[0]) if scalar else out
    if n < 16:
        raise InvalidOrderError(f"phi_k_integral: need n >= 16 for k >= 1, got {n}")
    rule = gauss_legendre(n)
    sa = math.sqrt(a)
    lams = sa * rule.nodes
    pref = 1.0 / (math.factorial(k - 1) * 4.0 ** k * a ** (k - 0.5))
    kernel = rule.weights * (a - lams ** 2) ** (k - 1)
    vals = sa * pref * (np.exp(np.outer(ts, lams)) @ kernel)
    return float(vals[0]) if scalar else vals


def phi_k_bessel(k: int, t: float, a: float) -> float:
    """Closed form sqrt(pi) 2^{-(k+1/2)} a^{-k/2+1/4} t^{-(k-1/2)} I_{k-1/2}(sqrt(a) t).

    Even in t, so negative t delegates to |t|; t = 0 is served by the
    integral route where the coefficient is exact.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 1:
        raise DomainError(f"phi_k_bessel: need integer k >= 1, got {k!r}")
    if a <= 0.0 or not math.isfinite(a):
        raise DomainError(f"phi_k_bessel: need a > 0, got {a!r}")
    t = float(t)
    if t == 0.0:
        raise DomainError("phi_k_bessel: t = 0 is served by phi_k_integral")
    t = abs(t)
    return (
        math.sqrt(math.pi)
        * 2.0 ** -(k + 0.5)
        * a ** (-0.5 * k + 0.25)
        * t ** -(k - 0.5)
        * bessel_i_half(k, math.sqrt(a) * t)
    )


def psi_k_recursion(k: int, t: float, eta: float, M: int) -> float:
    """psi_k from psi_0 = cosh(eta t) and the product-identity recursion.

    psi_{k+1}(t, eta) = (eta^2/2) * sum over compositions of k of the
    multinomial-weighted product of psi_{l_m}(t, eta/2^m), support truncated
    at depth M, all-zero tails closed by sinh(x)/x.  Memoization keys on the
    coefficient order and the power-of-two scale offset.
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 0:
        raise DomainError(f"psi_k_recursion: need integer k >= 0, got {k!r}")
    if k > MAX_K:
        raise DepthGuardError(f"psi_k_recursion: k = {k} exceeds the depth guard {MAX_K}")
    if M < MIN_DEPTH:
        raise DepthGuardError(f"psi_k_recursion: truncation depth M = {M} below {MIN_DEPTH}")
    t = float(t)
    eta = float(eta)
    psi_memo: dict[tuple[int, int], float] = {}
    tail_memo: dict[tuple[int, int, int], float] = {}

    def psi(l: int, p: int) -> float:
        # psi_l(t, eta / 2^p)
        key = (l, p)
        if key in psi_memo:
            return psi_memo[key]
        e = eta / 2.0 ** p
        if l == 0:
            v = cosh_sqrt_real((e * t) ** 2)
        else:
            v = 0.5 * e * e * math.factorial(l - 1) * tail(l - 1, p, 1)
        psi_memo[key] = v
        return v

    def tail(rem: int, p: int, m: int) -> float:
        # sum over (l_m, l_{m+1}, ...) with sum rem of prod psi_{l_j}(t, eta/2^{p+j})/l_j!
        if rem == 0:
            return sinch_sqrt_real((eta / 2.0 ** p * t / 2.0 ** (m - 1)) ** 2)
        if m > M:
            return 0.0
        key = (rem, p, m)
        if key in tail_memo:
            return tail_memo[key]
        v = 0.0
        for l in range(rem + 1):
            v += psi(l, p + m) / math.factorial(l) * tail(rem - l, p, m + 1)
        tail_memo[key] = v
        return v

    return psi(k, 0)


class TaylorPartialSum(NamedTuple):
    value: float
    last_term: float


def phi_from_taylor(t: float, p: Params, K: int, n: int = 64) -> TaylorPartialSum:
    """Partial sum sum_{k<=K} phi_k(t, a) b^k / k! plus the magnitude of its last term."""
    if not isinstance(K, (int, np.integer)) or isinstance(K, bool) or K < 1:
        raise DomainError(f"phi_from_taylor: need integer K >= 1, got {K!r}")
    t = float(t)
    total = phi_k_integral(0, t, p.a, n)
    last = total
    for k in range(1, K + 1):
        last = phi_k_integral(k, t, p.a, n) * p.b ** k / math.factorial(k)
        total += last
    return TaylorPartialSum(value=total, last_term=abs(last))


def phi_xi_derivative_series(m: int, t: float, eta: float, xi: float, K: int, M: int = 25) -> float:
    """m-th xi-derivative of cosh(eta sqrt(t^2 + xi)) from the psi coefficients:

        sum_{k=m}^{K} psi_k(t, eta) xi^{k-m} / (k-m)!

    Valid for xi small enough that the last included term is below 1e-8.
    """
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 1:
        raise DomainError(f"need integer m >= 1, got {m!r}")
    if m > MAX_DERIVATIVE_ORDER:
        raise DepthGuardError(f"derivative order m = {m} exceeds the guard {MAX_DERIVATIVE_ORDER}")
    if K > MAX_K:
        raise DepthGuardError(f"K = {K} exceeds the depth guard {MAX_K}")
    if K < m:
        raise DomainError(f"need K >= m, got K={K}, m={m}")
    xi = float(xi)
    if xi < 0.0:
        raise DomainError(f"need xi >= 0, got {xi}")
    total = 0.0
    last = 0.0
    for k in range(m, K + 1):
        last = psi_k_recursion(k, t, eta, M) * xi ** (k - m) / math.factorial(k - m)
        total += last
    if abs(last) > 1e-8:
        raise DepthGuardError(
            f"truncation tail too large: last term {abs(last):.3e} exceeds 1e-8; increase K or reduce xi"
        )
    return total
