#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Times the hot paths that dominate the verification battery: Gauss-Legendre
node generation, the series kernels on scalar and grid inputs, the small
symmetric eigensolves, and a full Gram battery.  Run:

    python benchmarks/bench_backends.py [--repeat 5]

The first numba call includes JIT compilation; kernels are warmed before
timing so the table shows steady-state numbers.
"""
import argparse
import time

import numpy as np

from coshrep import _kernels_numpy


def _load_numba():
    try:
        from coshrep import _kernels_numba
        return _kernels_numba
    except ImportError:
        return None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _gram_battery(kernels, spectra):
    # mimics the convexity check inner loop: phi entries + eigensolve
    out = 0.0
    for pts in spectra:
        sums = pts[:, None] + pts[None, :]
        z = sums * sums + 1.0
        vals = kernels.cosh_sqrt_real_arr(z.ravel()).reshape(sums.shape)
        out += kernels.sym_eigvals(vals)[0]
    return out


def build_cases(kernels):
    rng = np.random.default_rng(0)
    grid = np.linspace(-40.0, 120.0, 4096)
    lams = np.linspace(-1.0, 1.0, 4096)
    mats = [np.asarray(0.5 * (m + m.T)) for m in rng.normal(size=(200, 8, 8))]
    point_sets = [rng.uniform(-3, 3, 8) for _ in range(200)]
    return {
        "gauss-legendre nodes n=1024": lambda: kernels.gl_nodes_weights(1024),
        "cosh-sqrt series, 4096-grid": lambda: kernels.cosh_sqrt_real_arr(grid),
        "density series, 4096-grid": lambda: kernels.density_series_arr(lams, 1.0, 1.0),
        "bessel I1 scalar x2000": lambda: [kernels.bessel_i1_kern(x) for x in np.linspace(0.0, 40.0, 2000)],
        "eigvals 8x8 x200": lambda: [kernels.sym_eigvals(m) for m in mats],
        "gram battery 8pts x200": lambda: _gram_battery(kernels, point_sets),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    numba_kernels = _load_numba()
    rows = []
    numpy_cases = build_cases(_kernels_numpy)
    numba_cases = build_cases(numba_kernels) if numba_kernels else None
    for name in numpy_cases:
        if numba_cases:
            numba_cases[name]()  # warm the JIT
            t_nb = _time(numba_cases[name], args.repeat)
        else:
            t_nb = float("nan")
        t_np = _time(numpy_cases[name], args.repeat)
        rows.append((name, t_np, t_nb))

    print(f"{'case':<32} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for name, t_np, t_nb in rows:
        speed = t_np / t_nb if t_nb == t_nb and t_nb > 0 else float("nan")
        print(f"{name:<32} {t_np * 1e3:>10.3f}ms {t_nb * 1e3:>10.3f}ms {speed:>8.1f}x")
    if numba_kernels is None:
        print("numba not importable; only the fallback was timed")


if __name__ == "__main__":
    main()
