"""
Holonomy models module.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy import linalg

from app.errors import InputError
from app.rep.models import GroupElement, Representation

PATH = "path"
CYCLE = "cycle"
SPACETIME_KINDS = (PATH, CYCLE)


@dataclass(frozen=True)
class DiscreteSpacetime:
    """Graph spacetime: a path (no loops) or a cycle (one independent loop)."""
    vertices: int
    edges: Tuple[Tuple[int, int], ...]
    kind: str
    base: int = 0

    @property
    def loops(self) -> int:
        return 1 if self.kind == CYCLE else 0

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "kind": self.kind,
            "vertices": self.vertices,
            "edges": [list(e) for e in self.edges],
            "base": self.base,
        }


@dataclass(frozen=True, eq=False)
class DiscreteConnection:
    """Parallel transports, one per edge of the spacetime, in edge order."""
    transports: Tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "transports", tuple(self.transports))

    @property
    def n(self) -> int:
        return self.transports[0].n if self.transports else 0

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"transports": [t.matrix.tolist() for t in self.transports]}


@dataclass(frozen=True, eq=False)
class GaugeTransform:
    """Group element per vertex."""
    elements: Tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"elements": [g.matrix.tolist() for g in self.elements]}


@dataclass(frozen=True, eq=False)
class ResidualGroup:
    """Matrix group exp(span of generators), acting on R^n."""
    generators: np.ndarray  # shape (k, n, n)
    name: str = "H"

    def __post_init__(self):
        gens = np.array(self.generators, dtype=float)
        gens.setflags(write=False)
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return self.generators.shape[0]

    @property
    def n(self) -> int:
        return self.generators.shape[1]

    @classmethod
    def circle(cls) -> "ResidualGroup":
        """SO(2) acting on R^2."""
        return cls(generators=np.array([[[0.0, -1.0], [1.0, 0.0]]]), name="SO(2)")

    @classmethod
    def from_stabilizer(cls, rep: Representation, lie_h: np.ndarray, name: str = "H") -> "ResidualGroup":
        """Subgroup generated by rho'(tau) for the columns tau of lie_h."""
        lie_h = np.asarray(lie_h, dtype=float)
        if lie_h.ndim != 2 or lie_h.shape[0] != rep.algebra.dim:
            raise InputError(f"stabilizer basis must have {rep.algebra.dim} rows")
        return cls(generators=np.einsum("aj,aik->jik", lie_h, rep.generators), name=name)

    @property
    def is_abelian(self) -> bool:
        g = self.generators
        commutators = np.einsum("aij,bjk->abik", g, g) - np.einsum("bij,ajk->abik", g, g)
        scale = 1.0 + float(np.max(np.abs(g), initial=0.0)) ** 2
        return float(np.max(np.abs(commutators), initial=0.0)) <= 1e-10 * scale

    def algebra_element(self, theta) -> np.ndarray:
        """sum_j theta_j X_j."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        if self.dim == 0:
            return np.zeros((self.n, self.n))
        return np.einsum("j,jik->ik", theta, self.generators)

    def element(self, theta) -> GroupElement:
        """exp(sum_j theta_j X_j)."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        return GroupElement(matrix=linalg.expm(self.algebra_element(theta)), theta=theta)

    def random_element(self, seed: int, scale: float = 1.0) -> GroupElement:
        """exp of a Gaussian parameter vector drawn from default_rng(seed)."""
        return self.element(scale * np.random.default_rng(seed).standard_normal(self.dim))

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"name": self.name, "dim": self.dim, "n": self.n, "abelian": self.is_abelian}


@dataclass
class Equivalence:
    """Gauge equivalence verdict with the certificate gauge when one exists."""
    equivalent: bool
    method: str
    residual: float = 0.0
    gauge: Optional[GaugeTransform] = None

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "equivalent": self.equivalent,
            "method": self.method,
            "residual": self.residual,
        }


@dataclass
class Classification:
    """Equivalence classes of a sample of connections (indices into the sample)."""
    classes: List[List[int]] = field(default_factory=list)

    @property
    def representatives(self) -> List[int]:
        return [members[0] for members in self.classes]

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "count": self.count,
            "classes": [list(c) for c in self.classes],
            "representatives": self.representatives,
        }
