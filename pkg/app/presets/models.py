"""
Model preset models module.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from app.liealg.models import InvariantForm, LieAlgebraData
from app.potential.models import Potential
from app.rep.models import Representation


@dataclass(frozen=True)
class PresetExpectations:
    """Structural values a preset must reproduce at its default vacuum."""
    dim_h: int
    dim_goldstone: int
    massless_gauge: int
    # (value, multiplicity), ascending
    ym_spectrum: Tuple[Tuple[float, int], ...]
    higgs_spectrum: Tuple[Tuple[float, int], ...]

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "dim_h": self.dim_h,
            "dim_goldstone": self.dim_goldstone,
            "massless_gauge": self.massless_gauge,
            "ym_spectrum": [list(p) for p in self.ym_spectrum],
            "higgs_spectrum": [list(p) for p in self.higgs_spectrum],
        }


@dataclass(frozen=True, eq=False)
class ModelPreset:
    """A complete Yang-Mills-Higgs model ready for analysis."""
    name: str
    algebra: LieAlgebraData
    representation: Representation
    potential: Potential
    couplings: Tuple[float, ...]
    beta: InvariantForm
    vev: float
    # Unit vector along which the vacuum is expected; minimization starts at vev / 2 along it
    vacuum_direction: np.ndarray
    expected: Optional[PresetExpectations] = None
    notes: List[str] = field(default_factory=list)

    @property
    def initial_point(self) -> np.ndarray:
        return 0.5 * self.vev * self.vacuum_direction

    @property
    def expected_vacuum(self) -> np.ndarray:
        return self.vev * self.vacuum_direction

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "name": self.name,
            "couplings": list(self.couplings),
            "vev": self.vev,
            "n": self.representation.n,
            "dim": self.algebra.dim,
            "expected": None if self.expected is None else self.expected.to_dict(),
        }
