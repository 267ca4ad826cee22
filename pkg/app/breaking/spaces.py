"""
Stabilizer, its complement and the Goldstone / physical Higgs decomposition.
"""

import logging
from typing import Optional

import numpy as np
from scipy import linalg

from app.config import Config, default_config
from app.errors import IdentityViolationError, InputError
from app.rep.models import Representation

logger = logging.getLogger(__name__)


def canonical_signs(basis: np.ndarray) -> np.ndarray:
    """Flip columns so that each column's largest-magnitude entry is positive."""
    basis = np.array(basis, dtype=float)
    for j in range(basis.shape[1]):
        column = basis[:, j]
        if column[np.argmax(np.abs(column))] < 0:
            basis[:, j] = -column
    return basis


def form_orthonormalize(basis: np.ndarray, form: np.ndarray) -> np.ndarray:
    """Columns of basis made orthonormal for the positive-definite form."""
    if basis.shape[1] == 0:
        return basis
    gram = basis.T @ form @ basis
    lower = linalg.cholesky(0.5 * (gram + gram.T), lower=True)
    return basis @ linalg.inv(lower).T


def _check_state(rep: Representation, z0) -> np.ndarray:
    z0 = np.asarray(z0, dtype=float)
    if z0.shape != (rep.n,):
        raise InputError(f"Higgs state must have length {rep.n}, got shape {z0.shape}")
    return z0


def stabilizer(rep: Representation, z0, block_form: np.ndarray, cfg: Optional[Config] = None) -> np.ndarray:
    """d x h matrix of B-orthonormal columns spanning {x : rho'(x) z0 = 0}."""
    cfg = cfg or default_config()
    z0 = _check_state(rep, z0)
    tangents = rep.orbit_tangents(z0)
    if not np.any(tangents):
        kernel = np.eye(rep.algebra.dim)
    else:
        kernel = linalg.null_space(tangents, rcond=cfg.tol_rank)
    return canonical_signs(form_orthonormalize(kernel, block_form))


def complement(lie_h: np.ndarray, block_form: np.ndarray, cfg: Optional[Config] = None) -> np.ndarray:
    """B-orthogonal complement of the stabilizer, with B-orthonormal columns."""
    cfg = cfg or default_config()
    d = block_form.shape[0]
    if lie_h.shape[1] == 0:
        perp = np.eye(d)
    elif lie_h.shape[1] == d:
        return np.zeros((d, 0))
    else:
        perp = linalg.null_space((block_form @ lie_h).T, rcond=cfg.tol_rank)
    return canonical_signs(form_orthonormalize(perp, block_form))


def goldstone_space(
    rep: Representation,
    z0,
    lie_h_perp: np.ndarray,
    cfg: Optional[Config] = None,
) -> np.ndarray:
    """Orthonormal basis of W_G = span{T_eta z0 : eta in the complement}."""
    cfg = cfg or default_config()
    z0 = _check_state(rep, z0)
    k = lie_h_perp.shape[1]
    if k == 0:
        return np.zeros((rep.n, 0))

    images = rep.orbit_tangents(z0) @ lie_h_perp
    u, singular, _ = linalg.svd(images, full_matrices=False)
    rank = int(np.sum(singular > cfg.tol_rank * singular[0])) if singular[0] > 0 else 0
    if rank != k:
        # x -> T_x z0 is injective on the complement of its own kernel
        raise IdentityViolationError(
            f"orbit map has rank {rank} on a complement of dimension {k}",
            {"singular_values": singular.tolist()},
        )
    return canonical_signs(u[:, :rank])


def phys_space(w_goldstone: np.ndarray, n: int, cfg: Optional[Config] = None) -> np.ndarray:
    """Orthonormal basis of W_phys, the orthogonal complement of W_G in R^N."""
    cfg = cfg or default_config()
    if w_goldstone.shape[1] == 0:
        return np.eye(n)
    if w_goldstone.shape[1] == n:
        return np.zeros((n, 0))
    return canonical_signs(linalg.null_space(w_goldstone.T, rcond=cfg.tol_rank))


def grading_condition(n: int, dim: int, dim_h: int) -> bool:
    """Necessary condition N + h - d >= 0 for a Higgs vacuum with stabilizer dimension h."""
    ok = n + dim_h - dim >= 0
    if not ok:
        logger.warning(f"Grading condition fails: N + h - d = {n + dim_h - dim}")
    return ok
