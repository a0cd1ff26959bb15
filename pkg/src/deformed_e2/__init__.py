"""Operator algebra, Dyson maps and spectral phase diagrams for PT-symmetric
Hamiltonians built on the deformed Euclidean algebra E2."""

from .algebra import (
    OperatorPoly,
    PTKind,
    ThetaMismatchError,
    anticommutator,
    commutator,
    dagger,
    hermiticity_residual,
    max_coeff_diff,
    normal_order_product,
    pt_algebra_consistent,
    pt_apply,
    pt_invariance_check,
)

__version__ = "0.1.0"

__all__ = [
    "OperatorPoly",
    "PTKind",
    "ThetaMismatchError",
    "anticommutator",
    "commutator",
    "dagger",
    "hermiticity_residual",
    "max_coeff_diff",
    "normal_order_product",
    "pt_algebra_consistent",
    "pt_apply",
    "pt_invariance_check",
    "__version__",
]
