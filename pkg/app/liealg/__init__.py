"""
Lie algebra module initialization.
"""

from app.liealg.models import (
    ABELIAN,
    SIMPLE,
    AlgebraValidation,
    Factor,
    InvariantForm,
    LieAlgebraData,
)
from app.liealg.algebra import (
    ad_invariance_residual,
    ad_matrices,
    ad_matrix,
    algebra_preset,
    build_algebra,
    build_invariant_form,
    change_basis,
    direct_sum,
    killing_form,
    su2,
    u1,
    validate_algebra,
)

__all__ = [
    "ABELIAN",
    "SIMPLE",
    "AlgebraValidation",
    "Factor",
    "InvariantForm",
    "LieAlgebraData",
    "ad_invariance_residual",
    "ad_matrices",
    "ad_matrix",
    "algebra_preset",
    "build_algebra",
    "build_invariant_form",
    "change_basis",
    "direct_sum",
    "killing_form",
    "su2",
    "u1",
    "validate_algebra",
]
