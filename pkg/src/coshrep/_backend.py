"""Backend selection for the hot kernels.

``COSHREP_BACKEND=numpy`` forces the pure-numpy path; ``COSHREP_BACKEND=numba``
requires numba (import failure propagates).  Unset, numba is used when
importable.  ``benchmarks/bench_backends.py`` compares the two.
"""
import os

_choice = os.environ.get("COSHREP_BACKEND", "").strip().lower()

if _choice in ("numpy", "fallback"):
    _use_numba = False
elif _choice in ("numba", "jit"):
    _use_numba = True
elif _choice == "":
    try:
        import numba  # noqa: F401
        _use_numba = True
    except ImportError:
        _use_numba = False
else:
    raise RuntimeError(f"COSHREP_BACKEND must be 'numba' or 'numpy', got {_choice!r}")

if _use_numba:
    from ._kernels_numba import (
        bessel_i1_kern,
        cosh_sqrt_real,
        cosh_sqrt_real_arr,
        density_series_arr,
        density_series_kern,
        gl_nodes_weights,
        sinch_sqrt_real,
        sinch_sqrt_real_arr,
        sym_eigvals,
    )
    BACKEND = "numba"
else:
    from ._kernels_numpy import (
        bessel_i1_kern,
        cosh_sqrt_real,
        cosh_sqrt_real_arr,
        density_series_arr,
        density_series_kern,
        gl_nodes_weights,
        sinch_sqrt_real,
        sinch_sqrt_real_arr,
        sym_eigvals,
    )
    BACKEND = "numpy"

__all__ = [
    "BACKEND",
    "bessel_i1_kern",
    "cosh_sqrt_real",
    "cosh_sqrt_real_arr",
    "density_series_arr",
    "density_series_kern",
    "gl_nodes_weights",
    "sinch_sqrt_real",
    "sinch_sqrt_real_arr",
    "sym_eigvals",
]
