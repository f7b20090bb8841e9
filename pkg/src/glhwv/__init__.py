"""Highest weight vectors of the conjugation action of GL_n on k[gl_n]."""

from .combinatorics import (
    highest_weight_tensor,
    is_dominant,
    is_primitive,
    kostka_count,
    weight_lambda_t,
    weight_mu_t,
    zero_weight_multiplicity,
)
from .estimators import HighestWeightModule
from .invariants import fundamental_invariants, invariance_check
from .nilcone import (
    basis_check,
    delta_evaluation_matrix,
    generation_check,
    gl3_suite,
    jacobian_minor_certificate,
    nilpotent_from_sequence,
    power_weight_dimension_scan,
    question_experiment,
    sigma_choice,
)
from .ring import Polynomial, RingContext, format_polynomial, parse_polynomial
from .semiinvariants import apply_hwv, phi_involution, u_basic, v_basic, verify_semiinvariant

__version__ = "0.1.0"

__all__ = [
    "HighestWeightModule",
    "Polynomial",
    "RingContext",
    "apply_hwv",
    "basis_check",
    "delta_evaluation_matrix",
    "format_polynomial",
    "fundamental_invariants",
    "generation_check",
    "gl3_suite",
    "highest_weight_tensor",
    "invariance_check",
    "is_dominant",
    "is_primitive",
    "jacobian_minor_certificate",
    "kostka_count",
    "nilpotent_from_sequence",
    "parse_polynomial",
    "phi_involution",
    "power_weight_dimension_scan",
    "question_experiment",
    "sigma_choice",
    "u_basic",
    "v_basic",
    "verify_semiinvariant",
    "weight_lambda_t",
    "weight_mu_t",
    "zero_weight_multiplicity",
]
