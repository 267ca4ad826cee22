"""
Representation models module.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from app.liealg.models import LieAlgebraData


def _freeze(array) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Representation:
    """Orthogonal representation: generators T_a = rho'(e_a) acting on R^N."""
    algebra: LieAlgebraData
    n: int
    generators: np.ndarray  # shape (d, N, N)

    def __post_init__(self):
        object.__setattr__(self, "generators", _freeze(self.generators))

    def generator(self, x) -> np.ndarray:
        """rho'(x) = sum_a x[a] T_a."""
        return np.einsum("a,aij->ij", np.asarray(x, dtype=float), self.generators)

    def orbit_tangents(self, z) -> np.ndarray:
        """N x d matrix with columns T_a z."""
        return np.einsum("aij,j->ia", self.generators, np.asarray(z, dtype=float))

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "n": self.n,
            "dim": self.algebra.dim,
            "generators": self.generators.tolist(),
        }


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Orthogonal matrix rho(g) on R^N, optionally with its log-coordinates."""
    matrix: np.ndarray
    theta: Optional[np.ndarray] = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", _freeze(self.matrix))
        if self.theta is not None:
            object.__setattr__(self, "theta", _freeze(self.theta))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def act(self, z) -> np.ndarray:
        """rho(g) z."""
        return self.matrix @ np.asarray(z, dtype=float)

    def act_inverse(self, z) -> np.ndarray:
        """rho(g)^{-1} z = rho(g)^T z."""
        return self.matrix.T @ np.asarray(z, dtype=float)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "matrix": self.matrix.tolist(),
            "theta": None if self.theta is None else self.theta.tolist(),
        }


@dataclass
class RepresentationValidation:
    """Result of check_representation."""
    antisymmetry_residual: float = 0.0
    equivariance_residual: float = 0.0
    rank: int = 0
    dim: int = 0
    tolerance: float = 0.0
    problems: List[str] = field(default_factory=list)

    @property
    def faithful(self) -> bool:
        return self.rank == self.dim

    @property
    def passed(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "antisymmetry_residual": self.antisymmetry_residual,
            "equivariance_residual": self.equivariance_residual,
            "rank": self.rank,
            "dim": self.dim,
            "faithful": self.faithful,
            "passed": self.passed,
            "problems": list(self.problems),
        }
