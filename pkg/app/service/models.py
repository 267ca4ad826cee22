"""
Service result models.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from app.breaking.models import VacuumAnalysis
from app.potential.models import Minimum
from app.presets.models import ModelPreset

ALGEBRA = "algebra"
REPRESENTATION = "representation"
POTENTIAL = "potential"
GOLDSTONE = "goldstone"
SPECTRUM = "spectrum"
UNITARY = "unitary"
FLUCTUATION = "fluctuation"
NORMAL = "normal"
HOLONOMY = "holonomy"

CHECK_GROUPS = (ALGEBRA, REPRESENTATION, POTENTIAL, GOLDSTONE, SPECTRUM, UNITARY, FLUCTUATION, NORMAL, HOLONOMY)
# Groups that need a minimized and analyzed vacuum
VACUUM_GROUPS = frozenset({GOLDSTONE, SPECTRUM, UNITARY, FLUCTUATION, NORMAL})


@dataclass
class CheckOutcome:
    """One row of the invariant table."""
    name: str
    group: str
    passed: bool
    value: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""
    model: Optional[str] = None

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "name": self.name,
            "model": self.model,
            "group": self.group,
            "value": self.value,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class AnalysisRun:
    """Everything computed for one model."""
    model: ModelPreset
    groups: List[str]
    minimum: Optional[Minimum] = None
    analysis: Optional[VacuumAnalysis] = None
    sections: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, outcome: CheckOutcome) -> None:
        outcome.model = self.model.name
        self.checks.append(outcome)


@dataclass
class HolonomyRun:
    """Classification of a sample of connections."""
    spacetime: Dict[str, Any]
    group: Dict[str, Any]
    holonomies: List[List[List[float]]]
    classification: Dict[str, Any]
    certificates_verified: bool
    checks: List[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "spacetime": self.spacetime,
            "group": self.group,
            "holonomies": self.holonomies,
            "classification": self.classification,
            "certificates_verified": self.certificates_verified,
            "passed": self.passed,
        }
