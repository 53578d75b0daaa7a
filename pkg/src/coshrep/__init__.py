"""coshrep: representation and convexity certification of cosh(sqrt(a t^2 + b)).

Computes the representing density of the bilateral-Laplace form by four
independent methods, the Taylor coefficients in b by three routes,
certifies exponential convexity through Gram-matrix PSD checks and reduces
the 2x2 Hermitian trace-exponential to the same family.
"""
from ._backend import BACKEND
from .branch_geometry import EllipseContour, Params, Slit
from .bmv2 import Hermitian2, PhiReduction, reduce_to_phi, trace_exp, verify_reduction
from .density import (
    DensityMethod,
    DensityProfile,
    density_bessel,
    density_contour_ellipse,
    density_profile,
    density_series,
    density_sinh_quadrature,
    endpoint_value,
)
from .expconvex_gram import (
    GramReport,
    check_exp_convex,
    closure_property_suite,
    gram_matrix,
    psd_verdict,
    two_point_inequality,
)
from .laplace_rep import (
    RepresentingMeasure,
    d_gap,
    reconstruct_phi,
    representing_measure,
    verify_fourier,
    verify_tail_asymptotic,
)
from .quadrature import QuadratureRule, gauss_legendre, integrate
from .specfun import bessel_i1, bessel_i_half, cosh_sqrt, phi, product_identity_lhs_rhs, psi_sinc
from .taylor import (
    CompositionSequence,
    phi_from_taylor,
    phi_k_bessel,
    phi_k_integral,
    phi_xi_derivative_series,
    psi_k_recursion,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CompositionSequence",
    "DensityMethod",
    "DensityProfile",
    "EllipseContour",
    "GramReport",
    "Hermitian2",
    "Params",
    "PhiReduction",
    "QuadratureRule",
    "RepresentingMeasure",
    "Slit",
    "bessel_i1",
    "bessel_i_half",
    "check_exp_convex",
    "closure_property_suite",
    "cosh_sqrt",
    "d_gap",
    "density_bessel",
    "density_contour_ellipse",
    "density_profile",
    "density_series",
    "density_sinh_quadrature",
    "endpoint_value",
    "gauss_legendre",
    "gram_matrix",
    "integrate",
    "phi",
    "phi_from_taylor",
    "phi_k_bessel",
    "phi_k_integral",
    "phi_xi_derivative_series",
    "product_identity_lhs_rhs",
    "psd_verdict",
    "psi_k_recursion",
    "psi_sinc",
    "reconstruct_phi",
    "reduce_to_phi",
    "representing_measure",
    "trace_exp",
    "two_point_inequality",
    "verify_fourier",
    "verify_reduction",
    "verify_tail_asymptotic",
]
