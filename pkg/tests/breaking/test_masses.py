"""
Tests for the mass matrices, grouped spectra and the vacuum analysis.
"""

import numpy as np
import pytest

from app.breaking import (
    analyze_vacuum,
    gauge_gram,
    group_spectrum,
    mass_matrix_higgs,
    mass_matrix_ym,
    spectrum_gauge_invariance,
)
from app.breaking.models import GaugeInvarianceReport
from app.errors import DegenerateMinimumError
from app.potential import minimize
from app.presets import abelian_higgs, electroweak

pytestmark = [pytest.mark.unit, pytest.mark.breaking]


def _spectrum_pairs(spectrum):
    return list(zip(spectrum.values, spectrum.multiplicities))


def test_group_spectrum_merges_close_eigenvalues():
    """Test eigenvalues within the grouping tolerance form one group."""
    values = np.array([3.0, 1e-12, 1.0 + 1e-9, 0.0, 1.0])
    spectrum = group_spectrum(values, np.eye(5))

    assert spectrum.multiplicities == [2, 2, 1]
    assert spectrum.values[0] == 0.0
    assert spectrum.values[1] == pytest.approx(1.0, abs=1e-8)
    assert spectrum.values[2] == 3.0
    assert spectrum.massless_multiplicity() == 2
    assert spectrum.rank == 3
    assert spectrum.groups[1].basis.shape == (5, 2)


def test_group_spectrum_chains_neighbours():
    """Test a chain of small gaps merges even when its ends differ by more than the tolerance."""
    values = np.array([1.0, 1.0 + 1.5e-7, 1.0 + 3e-7])
    spectrum = group_spectrum(values, np.eye(3))

    assert spectrum.multiplicities == [3]
    assert spectrum.values[0] == pytest.approx(1.0 + 1.5e-7)


def test_group_spectrum_empty():
    """Test an empty spectrum has no groups."""
    spectrum = group_spectrum(np.zeros(0), np.zeros((0, 0)))

    assert spectrum.groups == []
    assert spectrum.rank == 0


@pytest.mark.parametrize("g", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("vev", [0.5, 1.0, 3.0])
def test_abelian_higgs_masses(cfg, g, vev):
    """Test the abelian Higgs model gives m^2 = 2 g^2 v^2 and a Higgs mass of 8 v^2."""
    model = abelian_higgs(couplings=[g], vev=vev, cfg=cfg)
    minimum = minimize(model.potential, model.representation, model.initial_point, cfg)
    analysis = analyze_vacuum(model.representation, model.potential, minimum.z0, model.beta, cfg)

    ym = _spectrum_pairs(analysis.ym_spectrum)
    assert len(ym) == 1
    assert ym[0][0] == pytest.approx(2.0 * g ** 2 * vev ** 2, rel=1e-7)
    assert ym[0][1] == 1

    higgs = _spectrum_pairs(analysis.higgs_spectrum)
    assert higgs[0] == (0.0, 1)
    assert higgs[1][0] == pytest.approx(8.0 * vev ** 2, rel=1e-7)
    assert analysis.dim_h == 0
    assert analysis.dim_goldstone == 1
    assert analysis.broken


def test_electroweak_spectrum(electroweak_vacuum):
    """Test the electroweak spectrum has a photon, two W and one Z."""
    _, analysis = electroweak_vacuum
    g, g_prime = analysis.beta.couplings

    ym = _spectrum_pairs(analysis.ym_spectrum)
    assert [m for _, m in ym] == [1, 2, 1]
    assert ym[0][0] == 0.0
    assert ym[1][0] == pytest.approx(0.5 * g ** 2, rel=1e-7)
    assert ym[2][0] == pytest.approx(0.5 * (g ** 2 + g_prime ** 2), rel=1e-7)

    higgs = _spectrum_pairs(analysis.higgs_spectrum)
    assert higgs[0] == (0.0, 3)
    assert higgs[1][0] == pytest.approx(8.0, rel=1e-7)
    assert higgs[1][1] == 1


def test_electroweak_mass_ratio_for_random_couplings(cfg, rng):
    """Test m_W^2 / m_Z^2 = g^2 / (g^2 + g'^2) for random couplings."""
    for _ in range(5):
        g, g_prime = rng.uniform(0.2, 2.0, size=2)
        model = electroweak(couplings=[g, g_prime], cfg=cfg)
        z0 = model.vacuum_direction * model.vev
        _, spectrum, _ = mass_matrix_ym(model.representation, z0, model.beta, cfg)

        w_mass, z_mass = spectrum.values[1], spectrum.values[2]
        assert w_mass / z_mass == pytest.approx(g ** 2 / (g ** 2 + g_prime ** 2), rel=1e-9)


def test_electroweak_stabilizer_mixes_isospin_and_hypercharge(electroweak_vacuum):
    """Test the unbroken generator has equal t3 and y components."""
    _, analysis = electroweak_vacuum

    assert analysis.dim_h == 1
    photon = analysis.lie_h[:, 0]
    np.testing.assert_allclose(photon[:2], 0.0, atol=1e-9)
    assert abs(photon[2]) == pytest.approx(abs(photon[3]), rel=1e-9)


def test_su2_adjoint_spectrum(adjoint_vacuum):
    """Test the adjoint Higgs leaves one massless and two massive gauge bosons."""
    _, analysis = adjoint_vacuum

    assert _spectrum_pairs(analysis.ym_spectrum)[0] == (0.0, 1)
    assert analysis.ym_spectrum.values[1] == pytest.approx(2.0, rel=1e-7)
    assert analysis.ym_spectrum.multiplicities == [1, 2]
    assert analysis.higgs_spectrum.multiplicities == [2, 1]


def test_ym_matrix_is_beta_self_adjoint(electroweak_vacuum):
    """Test beta M2_YM is symmetric and equals the Gram matrix."""
    _, analysis = electroweak_vacuum
    product = analysis.beta.matrix @ analysis.m2_ym

    np.testing.assert_allclose(product, product.T, atol=1e-12)
    np.testing.assert_allclose(product, analysis.gram, atol=1e-12)


def test_gauge_gram_is_positive_semidefinite(electroweak_model):
    """Test the Gram matrix of orbit tangents is PSD with the stabilizer in its kernel."""
    gram = gauge_gram(electroweak_model.representation, electroweak_model.vacuum_direction)

    assert np.linalg.eigvalsh(gram).min() > -1e-14
    np.testing.assert_allclose(gram @ np.array([0.0, 0.0, 1.0, 1.0]), 0.0, atol=1e-14)


def test_higgs_mass_matrix_rejects_maximum(abelian_model):
    """Test a negative Hessian eigenvalue raises DegenerateMinimumError."""
    with pytest.raises(DegenerateMinimumError, match="negative eigenvalue"):
        mass_matrix_higgs(abelian_model.potential, np.zeros(2))


def test_spectrum_gauge_invariance(electroweak_model, electroweak_vacuum, cfg):
    """Test both spectra are constant and both matrices covariant along the orbit."""
    minimum, _ = electroweak_vacuum
    report = spectrum_gauge_invariance(
        electroweak_model.representation,
        electroweak_model.potential,
        minimum.z0,
        electroweak_model.beta,
        trials=10,
        seed=3,
        cfg=cfg,
    )

    assert report.passed
    assert report.trials == 10
    assert report.ym_covariance_residual <= cfg.tol_spec


def test_spectrum_gauge_invariance_is_deterministic(adjoint_model, adjoint_vacuum, cfg):
    """Test the same seed reproduces the same residuals."""
    minimum, _ = adjoint_vacuum
    args = (adjoint_model.representation, adjoint_model.potential, minimum.z0, adjoint_model.beta)

    first = spectrum_gauge_invariance(*args, trials=5, seed=11, cfg=cfg)
    second = spectrum_gauge_invariance(*args, trials=5, seed=11, cfg=cfg)
    assert first.to_dict() == second.to_dict()


def test_spectrum_gauge_invariance_gates_on_absolute_residuals(cfg):
    """Test residuals at a large vev are compared to tol_spec without rescaling."""
    model = electroweak(couplings=(0.65, 0.35), vev=3.0, cfg=cfg)
    report = spectrum_gauge_invariance(
        model.representation, model.potential, model.expected_vacuum, model.beta, trials=10, seed=2, cfg=cfg
    )

    assert report.scale > 70.0
    assert report.max_spectral_deviation <= cfg.tol_spec
    assert report.to_dict()["scale"] == report.scale


def test_gauge_invariance_report_fails_above_absolute_tolerance():
    """Test a deviation within tolerance * scale but above tolerance fails."""
    report = GaugeInvarianceReport(
        max_spectral_deviation=5e-8,
        higgs_covariance_residual=0.0,
        ym_covariance_residual=0.0,
        trials=1,
        tolerance=1e-8,
        scale=73.0,
    )

    assert not report.passed
