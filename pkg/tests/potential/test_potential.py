"""
Tests for Higgs potentials and their derivatives.
"""

import numpy as np
import pytest

from app.errors import InputError
from app.potential import (
    check_bounded_below,
    check_invariance,
    evaluate,
    general_potential,
    gradient,
    hessian,
    mexican_hat,
    radial_critical_function,
    radial_profile,
    rotsym_potential,
)
from app.presets import abelian_higgs, electroweak

pytestmark = [pytest.mark.unit, pytest.mark.potential]


def _hat_value(z, vev=1.0):
    return float((vev ** 2 - z @ z) ** 2)


def test_mexican_hat_values():
    """Test the mexican hat vanishes on the vacuum sphere and equals vev^4 at the origin."""
    potential = mexican_hat(3, vev=2.0)

    assert evaluate(potential, np.zeros(3)) == pytest.approx(16.0)
    assert evaluate(potential, np.array([0.0, 2.0, 0.0])) == pytest.approx(0.0)
    assert potential.coefficients == (16.0, -8.0, 1.0)


def test_rotsym_gradient_and_hessian_closed_form():
    """Test grad V = 2 p'(u) z and Hess V = 2 p'(u) I + 4 p''(u) z z^T."""
    potential = mexican_hat(2)
    z = np.array([0.3, -0.4])
    u = 0.25

    np.testing.assert_allclose(gradient(potential, z), 2.0 * (-2.0 + 2.0 * u) * z)
    expected = 2.0 * (-2.0 + 2.0 * u) * np.eye(2) + 8.0 * np.outer(z, z)
    np.testing.assert_allclose(hessian(potential, z), expected)


def test_general_potential_finite_differences(rng):
    """Test finite-difference derivatives of a black-box potential match the closed form."""
    closed = mexican_hat(3)
    black_box = general_potential(3, _hat_value)
    z = rng.standard_normal(3)

    np.testing.assert_allclose(gradient(black_box, z), gradient(closed, z), rtol=1e-6, atol=1e-7)
    np.testing.assert_allclose(hessian(black_box, z), hessian(closed, z), rtol=1e-4, atol=1e-5)


def test_general_potential_uses_analytic_gradient():
    """Test the Hessian of a potential with an analytic gradient is its Jacobian."""
    potential = general_potential(
        2,
        _hat_value,
        gradient_fn=lambda z: -4.0 * (1.0 - z @ z) * z,
    )
    z = np.array([0.5, 0.1])

    np.testing.assert_allclose(hessian(potential, z), hessian(mexican_hat(2), z), rtol=1e-6, atol=1e-7)


def test_general_potential_requires_value_fn():
    """Test a value callable is required."""
    with pytest.raises(InputError, match="value_fn"):
        general_potential(2, None)


def test_rotsym_requires_coefficients():
    """Test empty coefficient lists are rejected."""
    with pytest.raises(InputError, match="coefficients"):
        rotsym_potential([], 2)


def test_evaluate_checks_shape():
    """Test points must have the representation dimension."""
    with pytest.raises(InputError, match="length 2"):
        evaluate(mexican_hat(2), np.zeros(3))


def test_radial_profile_at_vev():
    """Test f(v) = 0, f'(v) = 0, f''(v) = 8 v^2 for the mexican hat."""
    for vev in (0.5, 1.0, 3.0):
        f, df, ddf = radial_profile(mexican_hat(2, vev), vev)

        assert f == pytest.approx(0.0, abs=1e-12)
        assert df == pytest.approx(0.0, abs=1e-12)
        assert ddf == pytest.approx(8.0 * vev ** 2)


def test_radial_critical_function_vanishes_on_vacuum():
    """Test F_H = grad V . z is zero on the sphere and nonzero inside."""
    potential = mexican_hat(4)

    assert radial_critical_function(potential, np.array([0.0, 1.0, 0.0, 0.0])) == pytest.approx(0.0)
    assert radial_critical_function(potential, np.array([0.5, 0.0, 0.0, 0.0])) < 0.0


def test_radial_critical_function_undefined_at_origin():
    """Test F_H is rejected at z = 0."""
    with pytest.raises(InputError, match="z = 0"):
        radial_critical_function(mexican_hat(2), np.zeros(2))


def test_radial_profile_requires_rotsym():
    """Test the radial profile needs a rotationally symmetric potential."""
    with pytest.raises(InputError):
        radial_profile(general_potential(2, _hat_value), 1.0)


def test_check_invariance_passes_for_presets(cfg):
    """Test preset potentials are invariant under their gauge groups."""
    for model in (abelian_higgs(cfg=cfg), electroweak(cfg=cfg)):
        check = check_invariance(model.potential, model.representation, cfg=cfg)

        assert check.passed
        assert check.trials == cfg.trials


def test_check_invariance_detects_non_invariant_potential(cfg):
    """Test a potential depending on a single coordinate is not U(1)-invariant."""
    model = abelian_higgs(cfg=cfg)
    potential = general_potential(2, lambda z: float(z[0]))
    check = check_invariance(potential, model.representation, trials=10, seed=1, cfg=cfg)

    assert not check.passed
    assert check.max_residual > 1e-3


def test_check_invariance_dimension_mismatch(cfg):
    """Test the potential and representation must act on the same space."""
    with pytest.raises(InputError, match="R\\^2"):
        check_invariance(mexican_hat(3), abelian_higgs(cfg=cfg).representation, cfg=cfg)


def test_check_bounded_below():
    """Test the leading coefficient decides boundedness of rotsym potentials."""
    assert check_bounded_below(mexican_hat(2))
    assert not check_bounded_below(rotsym_potential([0.0, 1.0, -1.0], 2))
    assert check_bounded_below(general_potential(2, _hat_value))
    assert not check_bounded_below(general_potential(2, lambda z: -float(z @ z)))
