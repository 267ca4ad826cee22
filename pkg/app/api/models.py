"""
Pydantic models for model files and reports.
"""

import math
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCHEMA_VERSION = "1.0"
SIGNIFICANT_DIGITS = 12


def round_floats(value: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """Round every float in a nested structure to `digits` significant digits."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return value
        rounded = float(f"{value:.{digits}g}")
        return 0.0 if rounded == 0 else rounded
    if isinstance(value, dict):
        return {k: round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, digits) for v in value]
    return value


# ============================================================================
# Model File
# ============================================================================

class StrictModel(BaseModel):
    """Base for model-file sections: unknown keys are schema errors."""
    model_config = ConfigDict(extra="forbid")


class ModelSection(StrictModel):
    """Model identification and preset selection."""
    name: Optional[str] = Field(default=None, description="Model label echoed in reports")
    preset: Optional[str] = Field(default=None, description="Preset name: abelian_higgs, electroweak, su2_adjoint")
    vev: float = Field(default=1.0, gt=0, description="Vacuum radius |z0| for preset potentials")


class FactorSpec(StrictModel):
    """One factor of the direct-sum decomposition."""
    indices: List[int] = Field(..., min_length=1, description="Basis indices of the factor (0-based)")
    kind: str = Field(default="simple", pattern="^(simple|abelian)$", description="simple or abelian")


class AlgebraSection(StrictModel):
    """Lie algebra by preset name or inline structure constants."""
    preset: Optional[str] = Field(default=None, description="Algebra preset: su2, u1, su2xu1")
    structure_constants: Optional[List[List[List[float]]]] = Field(
        default=None, description="Dense tensor c[a][b][k]"
    )
    factors: Optional[List[FactorSpec]] = Field(default=None, description="Factor partition with kinds")
    labels: List[str] = Field(default_factory=list, description="Basis labels")

    @model_validator(mode="after")
    def check_source(self) -> "AlgebraSection":
        if (self.preset is None) == (self.structure_constants is None):
            raise ValueError("exactly one of preset or structure_constants is required")
        return self


class ComplexMatrix(StrictModel):
    """Complex matrix as real and imaginary parts, row-major."""
    re: List[List[float]] = Field(..., description="Real part")
    im: List[List[float]] = Field(..., description="Imaginary part")


class RepresentationSection(StrictModel):
    """Representation by real generators, complex generators or the adjoint action."""
    adjoint: bool = Field(default=False, description="Use the adjoint representation")
    generators: Optional[List[List[List[float]]]] = Field(default=None, description="Real N x N generators")
    complex_generators: Optional[List[ComplexMatrix]] = Field(
        default=None, description="Anti-Hermitian complex generators, realified"
    )

    @model_validator(mode="after")
    def check_source(self) -> "RepresentationSection":
        sources = [self.adjoint, self.generators is not None, self.complex_generators is not None]
        if sum(sources) != 1:
            raise ValueError("exactly one of adjoint, generators or complex_generators is required")
        return self


class PotentialSection(StrictModel):
    """Rotationally symmetric potential V(z) = sum_k coefficients[k] |z|^(2k)."""
    kind: str = Field(default="rotsym", pattern="^rotsym$", description="Potential kind")
    coefficients: List[float] = Field(..., min_length=1, description="Polynomial coefficients of p(u)")


class AnalysisSection(StrictModel):
    """Analysis settings; tolerances override the defaults."""
    seed: Optional[int] = Field(default=None, ge=0, description="Root seed for randomized checks")
    trials: Optional[int] = Field(default=None, ge=1, description="Trials per randomized check")
    init: Optional[List[float]] = Field(default=None, description="Minimization start point")
    unitary_states: int = Field(default=50, ge=0, description="Random states for the unitary-gauge check")
    tolerances: Dict[str, float] = Field(default_factory=dict, description="Config field overrides")


class HolonomySection(StrictModel):
    """Connections on a graph spacetime to classify."""
    kind: str = Field(..., pattern="^(path|cycle)$", description="Spacetime kind")
    length: int = Field(..., ge=1, description="Vertices of a path, edges of a cycle")
    group: str = Field(default="so2", pattern="^(so2|stabilizer)$", description="Residual group")
    connections: List[List[Union[float, List[float]]]] = Field(
        default_factory=list, description="Per connection: one parameter (or vector) per edge"
    )
    matrices: List[List[List[List[float]]]] = Field(
        default_factory=list, description="Per connection: one transport matrix per edge"
    )
    random: int = Field(default=0, ge=0, description="Additional random connections")
    expect_classes: Optional[int] = Field(default=None, ge=1, description="Expected number of classes")


class ModelFile(StrictModel):
    """Complete model file."""
    model: ModelSection = Field(default_factory=ModelSection)
    algebra: Optional[AlgebraSection] = None
    representation: Optional[RepresentationSection] = None
    potential: Optional[PotentialSection] = None
    couplings: Optional[List[float]] = Field(default=None, description="One positive coupling per factor")
    analysis: AnalysisSection = Field(default_factory=AnalysisSection)
    holonomy: Optional[HolonomySection] = None

    @property
    def has_model(self) -> bool:
        """False for holonomy-only files."""
        return self.model.preset is not None or self.algebra is not None

    @model_validator(mode="after")
    def check_complete(self) -> "ModelFile":
        if self.model.preset is None:
            sections = ("algebra", "representation", "potential", "couplings")
            missing = [name for name in sections if getattr(self, name) is None]
            holonomy_only = len(missing) == len(sections) and self.holonomy is not None
            if missing and not holonomy_only:
                raise ValueError(f"sections required without a preset: {', '.join(missing)}")
        else:
            inline = [name for name in ("algebra", "representation", "potential") if getattr(self, name) is not None]
            if inline:
                raise ValueError(f"sections not allowed with a preset: {', '.join(inline)}")
        if self.couplings is not None and any(not g > 0 for g in self.couplings):
            raise ValueError("couplings must be positive")
        return self


# ============================================================================
# Report Models
# ============================================================================

class SpectrumGroup(BaseModel):
    """Eigenvalue with multiplicity."""
    value: float = Field(..., description="Squared mass")
    multiplicity: int = Field(..., ge=1, description="Number of bosons of this mass")


class Spectrum(BaseModel):
    """Grouped spectrum."""
    groups: List[SpectrumGroup]
    tolerance: float


class ModelEcho(BaseModel):
    """Model as analyzed."""
    name: str
    preset: Optional[str] = None
    n: int
    dim: int
    couplings: List[float]
    vev: Optional[float] = None
    potential: Optional[List[float]] = None


class MinimumSection(BaseModel):
    """Certified minimum."""
    z0: List[float]
    value: float
    grad_norm: float
    iterations: int
    transversal_spectrum: List[float]


class StabilizerSection(BaseModel):
    """Stabilizer subalgebra Lie(H), B-orthonormal columns."""
    dim: int
    basis: List[List[float]]


class SpacesSection(BaseModel):
    """Goldstone / physical Higgs decomposition."""
    dim_goldstone: int
    dim_phys: int
    goldstone_basis: List[List[float]]
    phys_basis: List[List[float]]
    grading_ok: bool


class IdentityResult(BaseModel):
    """One asserted identity."""
    name: str
    expected: float
    got: float
    residual: float
    passed: bool


class CheckResult(BaseModel):
    """Summary row of an invariant check."""
    name: str
    model: Optional[str] = None
    group: str
    value: Optional[float] = None
    tolerance: Optional[float] = None
    passed: bool
    detail: str = ""


class Report(BaseModel):
    """Vacuum analysis report."""
    schema_version: str = SCHEMA_VERSION
    tool_version: str
    seed: int
    model: ModelEcho
    config: Dict[str, Any]
    minimum: MinimumSection
    stabilizer: StabilizerSection
    spaces: SpacesSection
    higgs_spectrum: Spectrum
    ym_spectrum: Spectrum
    rank_identities: List[IdentityResult]
    gauge_invariance: Dict[str, Any]
    residual_symmetry: Dict[str, Any]
    physical_higgs_mass: Optional[Dict[str, Any]] = None
    unitary_gauge: Optional[Dict[str, Any]] = None
    fluctuation_checks: Optional[Dict[str, Any]] = None
    normal_gradient_checks: Optional[Dict[str, Any]] = None
    holonomy: Optional[Dict[str, Any]] = None
    checks: List[CheckResult]
    passed: bool


class HolonomyReport(BaseModel):
    """Holonomy classification report."""
    schema_version: str = SCHEMA_VERSION
    tool_version: str
    seed: int
    spacetime: Dict[str, Any]
    group: Dict[str, Any]
    connections: int
    holonomies: List[List[List[float]]]
    classification: Dict[str, Any]
    certificates_verified: bool
    checks: List[CheckResult]
    passed: bool


class CheckSuiteReport(BaseModel):
    """Invariant suite over presets."""
    schema_version: str = SCHEMA_VERSION
    tool_version: str
    seed: int
    trials: int
    only: Optional[List[str]] = None
    results: List[CheckResult]
    passed: bool
