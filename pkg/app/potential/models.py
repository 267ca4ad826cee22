"""
Potential models module.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np


ROTSYM = "rotsym"
GENERAL = "general"


@dataclass(frozen=True, eq=False)
class Potential:
    """G-invariant Higgs potential on R^N.

    rotsym potentials are V(z) = p(|z|^2) with p given by its coefficients in
    ascending order; general potentials wrap a callable and optionally its
    analytic gradient and Hessian.
    """
    kind: str
    n: int
    coefficients: Tuple[float, ...] = ()
    value_fn: Optional[Callable[[np.ndarray], float]] = None
    gradient_fn: Optional[Callable[[np.ndarray], np.ndarray]] = None
    hessian_fn: Optional[Callable[[np.ndarray], np.ndarray]] = None

    @property
    def is_rotsym(self) -> bool:
        return self.kind == ROTSYM

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "kind": self.kind,
            "n": self.n,
            "coefficients": list(self.coefficients),
        }


@dataclass(frozen=True, eq=False)
class Minimum:
    """Certified minimum z0 with its transversal Hessian spectrum."""
    z0: np.ndarray
    value: float
    grad_norm: float
    hessian: np.ndarray
    transversal_spectrum: np.ndarray
    iterations: int = 0

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "z0": self.z0.tolist(),
            "value": self.value,
            "grad_norm": self.grad_norm,
            "transversal_spectrum": self.transversal_spectrum.tolist(),
            "iterations": self.iterations,
        }


@dataclass
class InvarianceCheck:
    """Result of check_invariance."""
    max_residual: float
    trials: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "max_residual": self.max_residual,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
