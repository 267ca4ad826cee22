"""
Potential module initialization.
"""

from app.potential.models import GENERAL, ROTSYM, InvarianceCheck, Minimum, Potential
from app.potential.potential import (
    check_bounded_below,
    check_invariance,
    evaluate,
    fd_gradient,
    fd_hessian,
    general_potential,
    gradient,
    hessian,
    mexican_hat,
    radial_critical_function,
    radial_profile,
    rotsym_potential,
)
from app.potential.minimize import certify_minimum, minimize, orbit_normal_basis

__all__ = [
    "GENERAL",
    "ROTSYM",
    "InvarianceCheck",
    "Minimum",
    "Potential",
    "certify_minimum",
    "check_bounded_below",
    "check_invariance",
    "evaluate",
    "fd_gradient",
    "fd_hessian",
    "general_potential",
    "gradient",
    "hessian",
    "mexican_hat",
    "minimize",
    "orbit_normal_basis",
    "radial_critical_function",
    "radial_profile",
    "rotsym_potential",
]
