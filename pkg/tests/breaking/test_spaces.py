"""
Tests for the stabilizer and the Goldstone / physical decomposition.
"""

import numpy as np
import pytest

from app.breaking import complement, goldstone_space, grading_condition, phys_space, stabilizer
from app.breaking.spaces import canonical_signs, form_orthonormalize
from app.errors import InputError

pytestmark = [pytest.mark.unit, pytest.mark.breaking]


def test_stabilizer_of_adjoint_vacuum(adjoint_model):
    """Test the stabilizer of e3 under the adjoint action is spanned by t3."""
    lie_h = stabilizer(adjoint_model.representation, [0.0, 0.0, 1.0], adjoint_model.beta.block_form)

    assert lie_h.shape == (3, 1)
    np.testing.assert_allclose(lie_h[:, 0], [0.0, 0.0, 1.0], atol=1e-12)


def test_stabilizer_of_origin_is_everything(electroweak_model):
    """Test z0 = 0 is fixed by the whole group."""
    block = electroweak_model.beta.block_form
    lie_h = stabilizer(electroweak_model.representation, np.zeros(4), block)

    assert lie_h.shape == (4, 4)
    assert complement(lie_h, block).shape == (4, 0)
    assert goldstone_space(electroweak_model.representation, np.zeros(4), np.zeros((4, 0))).shape == (4, 0)


def test_stabilizer_checks_state_length(adjoint_model):
    """Test the Higgs state must have length N."""
    with pytest.raises(InputError, match="length 3"):
        stabilizer(adjoint_model.representation, [1.0, 0.0], adjoint_model.beta.block_form)


def test_complement_is_form_orthogonal(electroweak_model):
    """Test the complement is B-orthonormal and B-orthogonal to the stabilizer."""
    block = electroweak_model.beta.block_form
    lie_h = stabilizer(electroweak_model.representation, electroweak_model.vacuum_direction, block)
    perp = complement(lie_h, block)

    assert perp.shape == (4, 3)
    np.testing.assert_allclose(perp.T @ block @ perp, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(lie_h.T @ block @ perp, 0.0, atol=1e-12)


def test_goldstone_and_phys_spaces_split_rn(electroweak_model):
    """Test W_G and W_phys are orthonormal and together span R^N."""
    rep = electroweak_model.representation
    block = electroweak_model.beta.block_form
    z0 = electroweak_model.vacuum_direction
    w_goldstone = goldstone_space(rep, z0, complement(stabilizer(rep, z0, block), block))
    w_phys = phys_space(w_goldstone, rep.n)
    basis = np.hstack([w_goldstone, w_phys])

    np.testing.assert_allclose(basis.T @ basis, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(np.abs(w_phys[:, 0]), np.abs(z0), atol=1e-12)


def test_phys_space_edge_cases():
    """Test an empty W_G leaves all of R^N physical and a full W_G leaves nothing."""
    np.testing.assert_array_equal(phys_space(np.zeros((3, 0)), 3), np.eye(3))
    assert phys_space(np.eye(2), 2).shape == (2, 0)


def test_grading_condition():
    """Test N + h - d >= 0."""
    assert grading_condition(4, 4, 1)
    assert grading_condition(2, 1, 0)
    assert not grading_condition(2, 4, 1)


def test_canonical_signs_make_largest_entry_positive():
    """Test each column's largest-magnitude entry becomes positive."""
    basis = canonical_signs(np.array([[0.1, 0.9], [-0.8, -0.2]]))

    np.testing.assert_allclose(basis, [[-0.1, 0.9], [0.8, -0.2]])


def test_form_orthonormalize():
    """Test columns become orthonormal for a positive-definite form."""
    form = np.diag([4.0, 1.0])
    basis = form_orthonormalize(np.array([[1.0, 1.0], [0.0, 1.0]]), form)

    np.testing.assert_allclose(basis.T @ form @ basis, np.eye(2), atol=1e-14)
