"""
Tests for AnalysisService.
"""

import numpy as np
import pytest

from app.breaking import group_spectrum
from app.errors import InputError
from app.service import CHECK_GROUPS, resolve_groups
from app.service.analysis_service import spectrum_matches

pytestmark = [pytest.mark.service]


@pytest.mark.parametrize("model_name", ["abelian_model", "electroweak_model", "adjoint_model"])
def test_run_all_groups(analysis_service, model_name, request):
    """Test every vacuum check passes on every preset."""
    model = request.getfixturevalue(model_name)
    run = analysis_service.run(model, groups=[g for g in CHECK_GROUPS if g != "holonomy"])

    failed = [c.name for c in run.checks if not c.passed]
    assert failed == []
    assert run.passed
    assert run.minimum is not None
    assert run.analysis is not None
    assert {c.model for c in run.checks} == {model.name}
    for key in ("algebra", "representation", "potential", "rank_identities", "gauge_invariance", "unitary_gauge"):
        assert key in run.sections


def test_run_electroweak_reports_spectrum(analysis_service, electroweak_model):
    """Test the W and Z masses of the analyzed vacuum."""
    run = analysis_service.run(electroweak_model, groups=["spectrum"])
    groups = run.analysis.ym_spectrum.groups

    assert [g.multiplicity for g in groups] == [1, 2, 1]
    assert groups[1].eigenvalue == pytest.approx(0.5 * 0.65 ** 2, rel=1e-8)
    assert groups[2].eigenvalue == pytest.approx(0.5 * (0.65 ** 2 + 0.35 ** 2), rel=1e-8)
    assert "physical_higgs_mass" in run.sections


def test_run_static_groups_skip_minimization(analysis_service, adjoint_model):
    """Test algebra, representation and potential checks need no vacuum."""
    run = analysis_service.run(adjoint_model, groups=["potential", "algebra"])

    assert run.groups == ["algebra", "potential"]
    assert run.minimum is None
    assert run.analysis is None
    assert {c.group for c in run.checks} == {"algebra", "potential"}
    assert run.passed


def test_run_from_custom_init(analysis_service, abelian_model):
    """Test any nonzero start on the abelian model reaches the unit circle."""
    run = analysis_service.run(abelian_model, init=[0.1, -0.3], groups=["goldstone"])

    assert np.linalg.norm(run.minimum.z0) == pytest.approx(1.0, abs=1e-10)
    assert run.passed


def test_run_unitary_on_sphere_orbit(analysis_service, adjoint_model):
    """Test the alignment check is reported when the orbit is the whole sphere."""
    run = analysis_service.run(adjoint_model, groups=["unitary"], unitary_states=3)
    section = run.sections["unitary_gauge"]

    assert section["states"] == 3
    assert section["consistency_residual"] is not None
    assert "unitary gauge aligns the state with z0" in [c.name for c in run.checks]
    assert run.passed


def test_run_without_unitary_states(analysis_service, abelian_model):
    """Test zero unitary-gauge states skips the group."""
    run = analysis_service.run(abelian_model, groups=["unitary"], unitary_states=0)

    assert run.sections["unitary_gauge"]["states"] == 0
    assert run.checks == []


@pytest.mark.parametrize("model_name", ["electroweak_model", "abelian_model"])
def test_run_unitary_default_states_on_rotsym_presets(analysis_service, model_name, request):
    """Test the default fifty random states all align with z0 within 1e-7."""
    run = analysis_service.run(request.getfixturevalue(model_name), groups=["unitary"])
    section = run.sections["unitary_gauge"]

    assert section["states"] == 50
    assert section["consistency_residual"] <= 1e-7
    assert section["closed_form_residual"] <= 1e-10
    assert run.passed


def test_run_requires_model(analysis_service):
    """Test a missing model raises InputError."""
    with pytest.raises(InputError, match="model is required"):
        analysis_service.run(None)


def test_resolve_groups():
    """Test selections are validated, deduplicated and put in canonical order."""
    assert resolve_groups(None) == list(CHECK_GROUPS)
    assert resolve_groups(["spectrum", "algebra", "spectrum"]) == ["algebra", "spectrum"]
    with pytest.raises(InputError, match="unknown check group: masses"):
        resolve_groups(["masses"])


def test_spectrum_matches():
    """Test spectra match on multiplicities and relative values."""
    spectrum = group_spectrum(np.array([0.0, 2.0, 2.0]), np.eye(3))

    assert spectrum_matches(spectrum, ((0.0, 1), (2.0, 2)), 1e-9)
    assert not spectrum_matches(spectrum, ((0.0, 1), (2.0, 1), (2.0, 1)), 1e-9)
    assert not spectrum_matches(spectrum, ((0.0, 1), (2.1, 2)), 1e-9)
