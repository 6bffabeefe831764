"""Exact computations for Hankel operators and polyanalytic projections on the
Fock space of the Gaussian measure ``(1/pi) exp(-m|z|^2) dA``."""

from .dbar import SolutionReport, solve_min_norm, verify_minimality
from .hankel import (
    Classification,
    NormSequence,
    apply_big,
    apply_middle_Y,
    apply_small,
    apply_tilde,
    classify,
    cross_orthogonality,
    growth_degree,
    norm_sq_sequence,
)
from .laguerre import (
    identity_gould,
    identity_vandermonde,
    laguerre_coeffs,
    laguerre_eval,
    moment_I,
    moment_I_closed,
)
from .oracle import gauss_laguerre, quad_inner, quad_moment
from .polyanalytic import PolyPoly, basis_element, dbar, inner, monomial_inner, mul_conj_symbol
from .projection import (
    build_sector_basis_S,
    project_conjF0,
    project_corrector,
    project_F_generic,
    project_monomial_F,
    project_S,
)
from .scalar import Scalar

__version__ = "0.1.0"
