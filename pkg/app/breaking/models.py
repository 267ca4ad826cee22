"""
Symmetry-breaking models module.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from app.errors import IdentityViolationError
from app.liealg.models import InvariantForm
from app.rep.models import GroupElement


@dataclass
class SpectralGroup:
    """Eigenvalues merged within the grouping tolerance."""
    eigenvalue: float
    multiplicity: int
    basis: np.ndarray  # columns span the eigenspace

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"value": self.eigenvalue, "multiplicity": self.multiplicity}


@dataclass
class GroupedSpectrum:
    """Sorted spectrum with multiplicities (bosons of mass m)."""
    groups: List[SpectralGroup]
    tolerance: float
    eigenvalues: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def dimension(self) -> int:
        return sum(g.multiplicity for g in self.groups)

    @property
    def values(self) -> List[float]:
        return [g.eigenvalue for g in self.groups]

    @property
    def multiplicities(self) -> List[int]:
        return [g.multiplicity for g in self.groups]

    def massless_multiplicity(self) -> int:
        """Multiplicity of the group at zero, if any."""
        return sum(g.multiplicity for g in self.groups if abs(g.eigenvalue) <= self.tolerance)

    @property
    def rank(self) -> int:
        return self.dimension - self.massless_multiplicity()

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "groups": [g.to_dict() for g in self.groups],
            "tolerance": self.tolerance,
        }


@dataclass
class VacuumAnalysis:
    """Stabilizer, Goldstone / physical Higgs split and both mass matrices at z0."""
    z0: np.ndarray
    beta: InvariantForm
    lie_h: np.ndarray          # d x h, B-orthonormal columns
    lie_h_perp: np.ndarray     # d x (d - h), B-orthonormal columns
    w_goldstone: np.ndarray    # N x (d - h), orthonormal columns
    w_phys: np.ndarray         # N x (N - d + h), orthonormal columns
    m2_higgs: np.ndarray       # N x N
    m2_ym: np.ndarray          # d x d, beta-self-adjoint
    gram: np.ndarray           # G_ab = 2 (T_a z0).(T_b z0)
    higgs_spectrum: GroupedSpectrum
    ym_spectrum: GroupedSpectrum

    @property
    def n(self) -> int:
        return self.z0.size

    @property
    def dim(self) -> int:
        return self.lie_h.shape[0]

    @property
    def dim_h(self) -> int:
        return self.lie_h.shape[1]

    @property
    def dim_goldstone(self) -> int:
        return self.w_goldstone.shape[1]

    @property
    def dim_phys(self) -> int:
        return self.w_phys.shape[1]

    @property
    def broken(self) -> bool:
        return self.dim_goldstone > 0


@dataclass
class IdentityCheck:
    """One asserted identity with its expected and observed value."""
    name: str
    expected: float
    got: float
    passed: bool
    residual: float = 0.0

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "name": self.name,
            "expected": self.expected,
            "got": self.got,
            "residual": self.residual,
            "passed": self.passed,
        }


@dataclass
class RankIdentityReport:
    """Goldstone theorem and the Higgs-mechanism rank identities."""
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def raise_for_failures(self) -> None:
        """Raise IdentityViolationError naming every failed identity."""
        failed = self.failures()
        if failed:
            names = ", ".join(c.name for c in failed)
            raise IdentityViolationError(
                f"rank identities failed: {names}",
                {"failures": [c.to_dict() for c in failed]},
            )

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"checks": [c.to_dict() for c in self.checks], "passed": self.passed}


@dataclass
class GaugeInvarianceReport:
    """Spectra and matrices of both mass matrices along the orbit of z0.

    Residuals are absolute; scale (1 + largest eigenvalue magnitude) is informational.
    """
    max_spectral_deviation: float
    higgs_covariance_residual: float
    ym_covariance_residual: float
    trials: int
    tolerance: float
    scale: float = 1.0

    @property
    def passed(self) -> bool:
        return bool(
            max(self.max_spectral_deviation, self.higgs_covariance_residual, self.ym_covariance_residual)
            <= self.tolerance
        )

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "max_spectral_deviation": self.max_spectral_deviation,
            "higgs_covariance_residual": self.higgs_covariance_residual,
            "ym_covariance_residual": self.ym_covariance_residual,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "scale": self.scale,
            "passed": self.passed,
        }


@dataclass
class UnitaryGaugeVacuum:
    """Closed-form vacuum nu = (|z0| / |phi|) phi for rotsym potentials."""
    nu: np.ndarray
    scale: float
    goldstone_residual: float


@dataclass
class UnitaryGaugeElement:
    """Group element g with rho(g)^{-1} phi orthogonal to the Goldstone space."""
    element: GroupElement
    residual: float
    theta: float
    iterations: int
    restarts: int


@dataclass
class FluctuationCheck:
    """Mass terms of a fluctuation around the vacuum pair."""
    higgs_coefficient: float
    higgs_expected: float
    higgs_residual: float
    gauge_lhs: float
    gauge_rhs: float
    gauge_residual: float
    passed: bool

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "higgs_coefficient": self.higgs_coefficient,
            "higgs_expected": self.higgs_expected,
            "higgs_residual": self.higgs_residual,
            "gauge_lhs": self.gauge_lhs,
            "gauge_rhs": self.gauge_rhs,
            "gauge_residual": self.gauge_residual,
            "passed": self.passed,
        }


@dataclass
class ExtractedMass:
    """m^2 = 2 g_phys^2 |T_eta z0|^2 for one beta-orthonormal eigenvector."""
    m2: float
    g_phys: float
    goldstone_norm: float
    residual: float

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "m2": self.m2,
            "g_phys": self.g_phys,
            "goldstone_norm": self.goldstone_norm,
            "residual": self.residual,
        }


@dataclass
class NormalGradientReport:
    """Gradient identities along the critical set."""
    higgs_applicable: bool
    higgs_residual: Optional[float]
    ym_residual: float
    masses: List[ExtractedMass]
    tolerance: float
    note: str = ""

    @property
    def passed(self) -> bool:
        higgs_ok = not self.higgs_applicable or (self.higgs_residual or 0.0) <= self.tolerance
        masses_ok = all(m.residual <= self.tolerance for m in self.masses)
        return bool(higgs_ok and self.ym_residual <= self.tolerance and masses_ok)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "higgs_applicable": self.higgs_applicable,
            "higgs_residual": self.higgs_residual,
            "ym_residual": self.ym_residual,
            "masses": [m.to_dict() for m in self.masses],
            "tolerance": self.tolerance,
            "note": self.note,
            "passed": self.passed,
        }


@dataclass
class ResidualSymmetryReport:
    """Stabilizer invariance of W_G, W_phys and of both mass matrices."""
    goldstone_residual: float
    phys_residual: float
    higgs_commutator: float
    ym_commutator: float
    grading_ok: bool
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(
            self.grading_ok
            and max(self.goldstone_residual, self.phys_residual, self.higgs_commutator, self.ym_commutator)
            <= self.tolerance
        )

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "goldstone_residual": self.goldstone_residual,
            "phys_residual": self.phys_residual,
            "higgs_commutator": self.higgs_commutator,
            "ym_commutator": self.ym_commutator,
            "grading_ok": self.grading_ok,
            "passed": self.passed,
        }


@dataclass
class PhysicalHiggsMassCheck:
    """Physical Higgs mass f''(r0) against the Hessian along e = z0 / |z0|."""
    expected: float
    got: float
    residual: float
    passed: bool

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            "expected": self.expected,
            "got": self.got,
            "residual": self.residual,
            "passed": self.passed,
        }
