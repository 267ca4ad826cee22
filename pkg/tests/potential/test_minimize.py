"""
Tests for minimization and minimum certification.
"""

import numpy as np
import pytest

from app.config import Config
from app.errors import ConvergenceError, DegenerateMinimumError, InputError
from app.potential import certify_minimum, mexican_hat, minimize, orbit_normal_basis

pytestmark = [pytest.mark.unit, pytest.mark.potential]


@pytest.mark.parametrize("vev", [0.5, 1.0, 3.0])
def test_minimize_reaches_vacuum_sphere(abelian_model, cfg, vev):
    """Test gradient descent lands on |z0| = vev with a small gradient."""
    potential = mexican_hat(2, vev)
    minimum = minimize(potential, abelian_model.representation, [0.2, 0.1], cfg)

    assert np.linalg.norm(minimum.z0) == pytest.approx(vev, abs=1e-10)
    assert minimum.grad_norm <= cfg.tol_min
    assert minimum.value == pytest.approx(0.0, abs=1e-12)
    assert minimum.iterations > 0


def test_transversal_spectrum_is_radial_mass(electroweak_vacuum):
    """Test the only transversal direction of the electroweak vacuum carries 8 v^2."""
    minimum, _ = electroweak_vacuum

    assert minimum.transversal_spectrum.shape == (1,)
    assert minimum.transversal_spectrum[0] == pytest.approx(8.0, rel=1e-6)


def test_orbit_normal_basis_is_orthonormal(adjoint_model):
    """Test the orbit normal space of the adjoint vacuum is the radial line."""
    z0 = np.array([0.0, 0.0, 1.0])
    normal = orbit_normal_basis(adjoint_model.representation, z0)

    assert normal.shape == (3, 1)
    np.testing.assert_allclose(np.abs(normal[:, 0]), [0.0, 0.0, 1.0], atol=1e-12)


def test_certify_rejects_local_maximum(abelian_model):
    """Test the origin of the mexican hat is not a minimum."""
    with pytest.raises(DegenerateMinimumError, match="not positive definite"):
        certify_minimum(abelian_model.potential, abelian_model.representation, np.zeros(2))


def test_minimize_reports_non_convergence(abelian_model):
    """Test exhausting max_iter raises a ConvergenceError naming the stage."""
    with pytest.raises(ConvergenceError) as info:
        minimize(abelian_model.potential, abelian_model.representation, [0.5, 0.0], Config(max_iter=1))

    assert info.value.stage == "minimize"


def test_minimize_checks_init_length(abelian_model):
    """Test the start point must live in R^N."""
    with pytest.raises(InputError, match="init"):
        minimize(abelian_model.potential, abelian_model.representation, [0.5, 0.0, 0.0])


def test_minimum_to_dict(abelian_vacuum):
    """Test the minimum serializes its point and spectrum."""
    minimum, _ = abelian_vacuum
    data = minimum.to_dict()

    assert len(data["z0"]) == 2
    assert data["transversal_spectrum"][0] == pytest.approx(8.0, rel=1e-6)
