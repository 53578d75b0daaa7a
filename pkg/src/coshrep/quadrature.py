"""Deterministic Gauss-Legendre quadrature.

Fixed-order rules on [-1, 1], computed once per order by Newton iteration
on the Legendre polynomials and cached read-only.  Callers pick the order
and verify convergence by order doubling themselves; nothing here adapts.
"""
import threading
from dataclasses import dataclass

import numpy as np

from ._backend import gl_nodes_weights
from .errors import InvalidIntervalError, InvalidOrderError, NonFiniteError

MAX_ORDER = 4096


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights of an n-point rule on (-1, 1); arrays are read-only."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


_cache: dict[int, QuadratureRule] = {}
_cache_lock = threading.Lock()


def gauss_legendre(n: int) -> QuadratureRule:
    """Return the n-point Gauss-Legendre rule on [-1, 1], cached by order."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InvalidOrderError(f"order must be an integer, got {n!r}")
    n = int(n)
    if n < 1 or n > MAX_ORDER:
        raise InvalidOrderError(f"order must be in [1, {MAX_ORDER}], got {n}")
    rule = _cache.get(n)
    if rule is not None:
        return rule
    nodes, weights = gl_nodes_weights(n)
    nodes = np.asarray(nodes, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    rule = QuadratureRule(nodes=nodes, weights=weights, order=n)
    with _cache_lock:
        _cache.setdefault(n, rule)
    return _cache[n]


def _sample(f, xs: np.ndarray) -> np.ndarray:
    """Evaluate f on the node vector, tolerating scalar-only callables."""
    try:
        vals = np.asarray(f(xs), dtype=np.float64)
        if vals.shape == xs.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([float(f(x)) for x in xs], dtype=np.float64)


def integrate(f, lo: float, hi: float, n: int) -> float:
    """Approximate the integral of f over [lo, hi] with the n-point rule."""
    lo = float(lo)
    hi = float(hi)
    if not (np.isfinite(lo) and np.isfinite(hi)):
        raise InvalidIntervalError(f"interval endpoints must be finite, got [{lo}, {hi}]")
    if lo >= hi:
        raise InvalidIntervalError(f"need lo < hi, got [{lo}, {hi}]")
    rule = gauss_legendre(n)
    half = 0.5 * (hi - lo)
    xs = 0.5 * (lo + hi) + half * rule.nodes
    vals = _sample(f, xs)
    bad = ~np.isfinite(vals)
    if bad.any():
        i = int(np.argmax(bad))
        raise NonFiniteError(f"integrand non-finite at node {i} (x={xs[i]!r}): {vals[i]!r}")
    return float(half * np.dot(rule.weights, vals))
