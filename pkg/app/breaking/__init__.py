"""
Symmetry breaking module initialization.
"""

from app.breaking.models import (
    ExtractedMass,
    FluctuationCheck,
    GaugeInvarianceReport,
    GroupedSpectrum,
    IdentityCheck,
    NormalGradientReport,
    PhysicalHiggsMassCheck,
    RankIdentityReport,
    ResidualSymmetryReport,
    SpectralGroup,
    UnitaryGaugeElement,
    UnitaryGaugeVacuum,
    VacuumAnalysis,
)
from app.breaking.spaces import complement, goldstone_space, grading_condition, phys_space, stabilizer
from app.breaking.masses import (
    adjoint_action,
    analyze_vacuum,
    gauge_gram,
    group_spectrum,
    mass_matrix_higgs,
    mass_matrix_ym,
    spectrum_gauge_invariance,
)
from app.breaking.identities import (
    extracted_masses,
    fluctuation_mass_check,
    normal_gradient_checks,
    physical_higgs_mass,
    rank_identities,
    residual_invariance,
)
from app.breaking.unitary import find_unitary_gauge_element, unitary_gauge_consistency, unitary_gauge_rotsym

__all__ = [
    "ExtractedMass",
    "FluctuationCheck",
    "GaugeInvarianceReport",
    "GroupedSpectrum",
    "IdentityCheck",
    "NormalGradientReport",
    "PhysicalHiggsMassCheck",
    "RankIdentityReport",
    "ResidualSymmetryReport",
    "SpectralGroup",
    "UnitaryGaugeElement",
    "UnitaryGaugeVacuum",
    "VacuumAnalysis",
    "adjoint_action",
    "analyze_vacuum",
    "complement",
    "extracted_masses",
    "find_unitary_gauge_element",
    "fluctuation_mass_check",
    "gauge_gram",
    "goldstone_space",
    "grading_condition",
    "group_spectrum",
    "mass_matrix_higgs",
    "mass_matrix_ym",
    "normal_gradient_checks",
    "phys_space",
    "physical_higgs_mass",
    "rank_identities",
    "residual_invariance",
    "spectrum_gauge_invariance",
    "stabilizer",
    "unitary_gauge_consistency",
    "unitary_gauge_rotsym",
]
