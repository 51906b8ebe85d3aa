"""Bidirectional discrete linear systems over Z^r.

Laurent polynomial operators, finite-support and periodic signals, the
scalar product, the shift action, and exact periodic kernels of
autoregressive systems.
"""

from ._core import (
    Field,
    FieldValue,
    FiniteSeq,
    LaurentPoly,
    LaurentsysError,
    PeriodicSeq,
    System,
    behavior_contains,
    check_adjoint,
    format_poly,
    kernel_dimension,
    parse_poly,
    parse_system,
    periodic_kernel_basis,
    periodic_system_matrix,
    periodize,
    run_selftest,
    scalar_product,
    shift,
)

__all__ = [
    "Field",
    "FieldValue",
    "FiniteSeq",
    "LaurentPoly",
    "LaurentsysError",
    "PeriodicSeq",
    "System",
    "behavior_contains",
    "check_adjoint",
    "format_poly",
    "kernel_dimension",
    "parse_poly",
    "parse_system",
    "periodic_kernel_basis",
    "periodic_system_matrix",
    "periodize",
    "run_selftest",
    "scalar_product",
    "shift",
]
