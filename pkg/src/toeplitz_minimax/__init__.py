"""Minimal sup-norm symbols of self-adjoint Toeplitz matrices.

The least sup-norm function whose Fourier coefficients reproduce a
self-adjoint Toeplitz matrix is an alternating step function; this package
computes it, its height ``c_A`` and its Blaschke product, and evaluates lower
bounds on the largest possible ratio ``c_A / ||A||``.
"""

from .blaschke import RationalInner, blaschke_order, cf_extremal, cf_norm, jet_of
from .estimator import MinimalSymbolSolver
from .exceptions import BracketError, ConvergenceError, DomainError, ResidualError
from .families import (
    FAMILIES,
    BoundReport,
    FamilySpec,
    bound_table,
    dilate_symbol,
    evaluate_fixed,
    family_step,
    norm_identity_check,
    poly_bound_n3,
    ratio,
    refine_local,
    solve_relations,
)
from .moments import extend_coefficients, indicator_moments, recover_set, recover_step
from .series import CoefficientJet, forward_map, inverse_map
from .solver import MinimizerResult, certificate, norm_at, solve_min
from .stepfn import AlternatingStepFunction, blaschke_from_arcs, fourier, step_from_blaschke, toeplitz_of
from .toeplitz import HermitianToeplitzSpec, build_toeplitz, max_singular_pair, operator_norm, singular_values

__version__ = "0.1.0"

__all__ = [
    "AlternatingStepFunction",
    "blaschke_from_arcs",
    "blaschke_order",
    "bound_table",
    "BoundReport",
    "BracketError",
    "build_toeplitz",
    "certificate",
    "cf_extremal",
    "cf_norm",
    "CoefficientJet",
    "ConvergenceError",
    "dilate_symbol",
    "DomainError",
    "evaluate_fixed",
    "extend_coefficients",
    "FAMILIES",
    "family_step",
    "FamilySpec",
    "forward_map",
    "fourier",
    "HermitianToeplitzSpec",
    "indicator_moments",
    "inverse_map",
    "jet_of",
    "max_singular_pair",
    "MinimalSymbolSolver",
    "MinimizerResult",
    "norm_at",
    "norm_identity_check",
    "operator_norm",
    "poly_bound_n3",
    "ratio",
    "RationalInner",
    "recover_set",
    "recover_step",
    "refine_local",
    "ResidualError",
    "singular_values",
    "solve_min",
    "solve_relations",
    "step_from_blaschke",
    "toeplitz_of",
]
