"""Two-dimensional constacyclic codes over finite fields.

Construction of (alpha, beta)-constacyclic codes of length s*l via the
idempotent decomposition of F_q[y]/<y^l - beta>, with explicit generator
and dual matrices, self-duality decisions, and exact classification
(minimum distance, weight enumerators, MDS labels) by exhaustive
enumeration.
"""

from . import errors
from .code2d import (
    CodeSpec,
    RingElement2D,
    SelfDualReport,
    c1_to_c2_permutation,
    dual_matrix,
    flatten_c1,
    flatten_c2,
    generator_matrix,
    generators,
    is_self_dual,
    orthogonality_criterion_check,
    parse_spec_file,
    parse_spec_text,
    ring_mul,
    sigma_shift,
    tau_shift,
    theorem5_screen,
    validate_spec,
)
from .codeops import (
    DEFAULT_BUDGET,
    INFINITE_DISTANCE,
    LinearCodeView,
    block_twist_shift,
    classify,
    in_row_space,
    macwilliams_transform,
    min_distance,
    nullspace,
    nullspace_view,
    row_space_equal,
    rref,
    weight_enumerator,
)
from .gf import FieldCtx, FieldElement, field_new, find_omega, mul_order
from .idempotent import (
    IdempotentSystem,
    build_system,
    reciprocal_idempotent,
    shift_eigenvalue,
    shift_eigenvalue_holds,
    unity_idempotent_closed_form,
)
from .poly import (
    Factorization,
    Poly,
    factor_binomial,
    format_poly,
    monic_divisors,
    parse_poly,
    poly_gcd,
    reciprocal,
)

__version__ = "0.1.0"

__all__ = [
    "CodeSpec",
    "DEFAULT_BUDGET",
    "Factorization",
    "FieldCtx",
    "FieldElement",
    "IdempotentSystem",
    "INFINITE_DISTANCE",
    "LinearCodeView",
    "Poly",
    "RingElement2D",
    "SelfDualReport",
    "block_twist_shift",
    "build_system",
    "c1_to_c2_permutation",
    "classify",
    "dual_matrix",
    "errors",
    "factor_binomial",
    "field_new",
    "find_omega",
    "flatten_c1",
    "flatten_c2",
    "format_poly",
    "generator_matrix",
    "generators",
    "in_row_space",
    "is_self_dual",
    "macwilliams_transform",
    "min_distance",
    "monic_divisors",
    "mul_order",
    "nullspace",
    "nullspace_view",
    "orthogonality_criterion_check",
    "parse_poly",
    "parse_spec_file",
    "parse_spec_text",
    "poly_gcd",
    "reciprocal",
    "reciprocal_idempotent",
    "ring_mul",
    "row_space_equal",
    "rref",
    "shift_eigenvalue",
    "shift_eigenvalue_holds",
    "sigma_shift",
    "tau_shift",
    "theorem5_screen",
    "unity_idempotent_closed_form",
    "validate_spec",
    "weight_enumerator",
]
