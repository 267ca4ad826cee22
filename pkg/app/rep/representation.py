"""
Orthogonal representations: construction, equivariance checks, realification
of unitary representations and group elements via the exponential map.

Realification convention: z = x + iy in C^n maps to (x_1..x_n, y_1..y_n),
all real parts first, then all imaginary parts.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy import linalg

from app.config import Config, default_config
from app.errors import InputError
from app.liealg.models import LieAlgebraData
from app.rep.models import GroupElement, Representation, RepresentationValidation

logger = logging.getLogger(__name__)


def build_representation(
    algebra: LieAlgebraData,
    generators,
    cfg: Optional[Config] = None,
    validate: bool = True,
) -> Representation:
    """Create a Representation from real N x N generator matrices."""
    t = np.asarray(generators, dtype=float)
    if t.ndim != 3 or t.shape[1] != t.shape[2]:
        raise InputError(f"generators must be a list of square matrices, got shape {t.shape}")
    if t.shape[0] != algebra.dim:
        raise InputError(f"expected {algebra.dim} generators, got {t.shape[0]}")

    rep = Representation(algebra=algebra, n=t.shape[1], generators=t)
    if validate:
        report = check_representation(rep, cfg)
        if not report.passed:
            raise InputError("invalid representation: " + "; ".join(report.problems))
    return rep


def check_representation(rep: Representation, cfg: Optional[Config] = None) -> RepresentationValidation:
    """Antisymmetry, commutation relations and faithfulness of the generators."""
    cfg = cfg or default_config()
    t = rep.generators
    c = rep.algebra.structure_constants

    antisymmetry = float(np.max(np.abs(t + t.transpose(0, 2, 1)), initial=0.0))

    commutators = np.einsum("aij,bjk->abik", t, t) - np.einsum("bij,ajk->abik", t, t)
    expected = np.einsum("abk,kij->abij", c, t)
    equivariance = float(np.max(np.abs(commutators - expected), initial=0.0))

    stacked = t.reshape(rep.algebra.dim, -1)
    singular = linalg.svdvals(stacked)
    threshold = cfg.tol_rank * (singular[0] if singular.size else 0.0)
    rank = int(np.sum(singular > threshold)) if singular.size and singular[0] > 0 else 0

    report = RepresentationValidation(
        antisymmetry_residual=antisymmetry,
        equivariance_residual=equivariance,
        rank=rank,
        dim=rep.algebra.dim,
        tolerance=cfg.tol_alg,
    )
    if antisymmetry > cfg.tol_alg:
        report.problems.append(f"generators not antisymmetric: {antisymmetry:.3e}")
    if equivariance > cfg.tol_alg:
        report.problems.append(f"commutation relations violated: {equivariance:.3e}")
    if not report.faithful:
        report.problems.append(f"representation not faithful: rank {rank} < dim {rep.algebra.dim}")
    return report


def realify_matrix(m) -> np.ndarray:
    """A + iB acting on C^n becomes [[A, -B], [B, A]] acting on R^2n."""
    m = np.asarray(m, dtype=complex)
    a, b = m.real, m.imag
    return np.block([[a, -b], [b, a]])


def realify(
    algebra: LieAlgebraData,
    complex_generators: Sequence,
    cfg: Optional[Config] = None,
    validate: bool = True,
) -> Representation:
    """Real form of a unitary representation given by anti-Hermitian generators."""
    cfg = cfg or default_config()
    mats = [np.asarray(m, dtype=complex) for m in complex_generators]
    for position, m in enumerate(mats):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InputError(f"complex generator {position} is not square")
        residual = float(np.max(np.abs(m + m.conj().T), initial=0.0))
        if residual > cfg.tol_alg:
            raise InputError(f"complex generator {position} is not anti-Hermitian: {residual:.3e}")
    return build_representation(algebra, [realify_matrix(m) for m in mats], cfg, validate)


def complex_structure(n_complex: int) -> np.ndarray:
    """Realified multiplication by i: J = [[0, -I], [I, 0]]."""
    return realify_matrix(1j * np.eye(n_complex))


def exp_element(rep: Representation, theta) -> GroupElement:
    """rho(exp(sum_a theta_a e_a)) via the scaling-and-squaring Pade exponential."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (rep.algebra.dim,):
        raise InputError(f"theta must have length {rep.algebra.dim}")
    return GroupElement(matrix=linalg.expm(rep.generator(theta)), theta=theta)


def identity_element(n: int) -> GroupElement:
    """The identity on R^n."""
    return GroupElement(matrix=np.eye(n))


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Matrix product rho(g1) rho(g2)."""
    return GroupElement(matrix=g1.matrix @ g2.matrix)


def inverse(g: GroupElement) -> GroupElement:
    """rho(g)^{-1} = rho(g)^T."""
    theta = None if g.theta is None else -g.theta
    return GroupElement(matrix=g.matrix.T.copy(), theta=theta)


def orthogonality_residual(g: GroupElement) -> float:
    """max |R^T R - I|."""
    r = g.matrix
    return float(np.max(np.abs(r.T @ r - np.eye(r.shape[0])), initial=0.0))


def check_group_element(g: GroupElement, cfg: Optional[Config] = None) -> None:
    """Raise InputError unless g is a rotation within tol_orth."""
    cfg = cfg or default_config()
    r = g.matrix
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise InputError(f"group element must be square, got shape {r.shape}")
    residual = orthogonality_residual(g)
    if residual > cfg.tol_orth:
        raise InputError(f"matrix is not orthogonal: residual {residual:.3e}")
    det = float(linalg.det(r))
    if abs(det - 1.0) > cfg.tol_orth:
        raise InputError(f"matrix is not in the identity component: det {det:.6f}")


def random_algebra_vector(dim: int, seed: int, scale: float = 1.0) -> np.ndarray:
    """Deterministic Gaussian coefficient vector in R^d."""
    rng = np.random.default_rng(seed)
    return scale * rng.standard_normal(dim)


def random_group_element(rep: Representation, seed: int, scale: float = 1.0) -> GroupElement:
    """exp_element of a scaled random algebra vector."""
    return exp_element(rep, random_algebra_vector(rep.algebra.dim, seed, scale))
