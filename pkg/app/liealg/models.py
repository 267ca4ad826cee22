"""
Lie algebra models module.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np


SIMPLE = "simple"
ABELIAN = "abelian"


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Factor:
    """One ideal of the direct-sum decomposition."""
    indices: Tuple[int, ...]
    kind: str = SIMPLE

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"indices": list(self.indices), "kind": self.kind}


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    """Compact Lie algebra given by structure constants c[a][b][k]."""
    dim: int
    structure_constants: np.ndarray
    factors: Tuple[Factor, ...]
    basis_labels: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "structure_constants", _freeze(self.structure_constants))
        object.__setattr__(self, "factors", tuple(self.factors))
        labels = tuple(self.basis_labels) or tuple(f"e{a + 1}" for a in range(self.dim))
        object.__setattr__(self, "basis_labels", labels)

    def factor_of(self, index: int) -> int:
        """Return the position of the factor containing a basis index."""
        for position, factor in enumerate(self.factors):
            if index in factor.indices:
                return position
        raise IndexError(f"basis index outside every factor: {index}")

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "dim": self.dim,
            "factors": [f.to_dict() for f in self.factors],
            "basis_labels": list(self.basis_labels),
        }


@dataclass(frozen=True, eq=False)
class InvariantForm:
    """Coupling-parametrized ad-invariant inner product beta on Lie(G)."""
    matrix: np.ndarray
    couplings: Tuple[float, ...]
    # Positive-definite block form B (beta with all couplings set to one)
    block_form: np.ndarray
    ad_residual: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "matrix", _freeze(self.matrix))
        object.__setattr__(self, "block_form", _freeze(self.block_form))
        object.__setattr__(self, "couplings", tuple(float(g) for g in self.couplings))

    def inner(self, x: np.ndarray, y: np.ndarray) -> float:
        """Evaluate beta(x, y)."""
        return float(np.asarray(x) @ self.matrix @ np.asarray(y))

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "matrix": self.matrix.tolist(),
            "couplings": list(self.couplings),
            "ad_residual": self.ad_residual,
        }


@dataclass
class AlgebraValidation:
    """Result of validate_algebra."""
    antisymmetry_residual: float = 0.0
    jacobi_residual: float = 0.0
    block_residual: float = 0.0
    tolerance: float = 0.0
    problems: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "antisymmetry_residual": self.antisymmetry_residual,
            "jacobi_residual": self.jacobi_residual,
            "block_residual": self.block_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "problems": list(self.problems),
        }
