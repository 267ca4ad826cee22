"""
Representation module initialization.
"""

from app.rep.models import GroupElement, Representation, RepresentationValidation
from app.rep.representation import (
    build_representation,
    check_group_element,
    check_representation,
    complex_structure,
    compose,
    exp_element,
    identity_element,
    inverse,
    orthogonality_residual,
    random_algebra_vector,
    random_group_element,
    realify,
    realify_matrix,
)

__all__ = [
    "GroupElement",
    "Representation",
    "RepresentationValidation",
    "build_representation",
    "check_group_element",
    "check_representation",
    "complex_structure",
    "compose",
    "exp_element",
    "identity_element",
    "inverse",
    "orthogonality_residual",
    "random_algebra_vector",
    "random_group_element",
    "realify",
    "realify_matrix",
]
