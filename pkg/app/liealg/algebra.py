"""
Compact Lie algebra operations: validation, adjoint matrices, Killing form and
the coupling-parametrized invariant form.
"""

import logging
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy import linalg

from app.config import Config, default_config
from app.errors import InputError
from app.liealg.models import (
    ABELIAN,
    SIMPLE,
    AlgebraValidation,
    Factor,
    InvariantForm,
    LieAlgebraData,
)

logger = logging.getLogger(__name__)


def build_algebra(
    structure_constants,
    factors: Optional[Sequence[Factor]] = None,
    basis_labels: Iterable[str] = (),
) -> LieAlgebraData:
    """Create LieAlgebraData, checking shapes and the factor partition."""
    c = np.asarray(structure_constants, dtype=float)
    if c.ndim != 3 or c.shape[0] != c.shape[1] or c.shape[1] != c.shape[2]:
        raise InputError(f"structure_constants must be a d x d x d tensor, got shape {c.shape}")
    d = c.shape[0]
    if d < 1:
        raise InputError("dimension must be at least 1")

    if factors is None:
        factors = (Factor(tuple(range(d)), SIMPLE),)
    seen = sorted(i for f in factors for i in f.indices)
    if seen != list(range(d)):
        raise InputError("factors must partition the basis indices 0..d-1")
    for f in factors:
        if f.kind not in (SIMPLE, ABELIAN):
            raise InputError(f"factor kind must be 'simple' or 'abelian', got {f.kind!r}")

    labels = tuple(basis_labels)
    if labels and len(labels) != d:
        raise InputError(f"basis_labels must have {d} entries")

    return LieAlgebraData(dim=d, structure_constants=c, factors=tuple(factors), basis_labels=labels)


def su2() -> LieAlgebraData:
    """su(2) with c[a][b][k] = epsilon_abk."""
    c = np.zeros((3, 3, 3))
    for a, b, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[a, b, k] = 1.0
        c[b, a, k] = -1.0
    return build_algebra(c, (Factor((0, 1, 2), SIMPLE),), ("t1", "t2", "t3"))


def u1() -> LieAlgebraData:
    """The abelian algebra u(1)."""
    return build_algebra(np.zeros((1, 1, 1)), (Factor((0,), ABELIAN),), ("y",))


def direct_sum(*algebras: LieAlgebraData) -> LieAlgebraData:
    """Direct sum with block-diagonal structure constants."""
    d = sum(alg.dim for alg in algebras)
    c = np.zeros((d, d, d))
    factors = []
    labels = []
    offset = 0
    for alg in algebras:
        block = slice(offset, offset + alg.dim)
        c[block, block, block] = alg.structure_constants
        for f in alg.factors:
            factors.append(Factor(tuple(i + offset for i in f.indices), f.kind))
        labels.extend(alg.basis_labels)
        offset += alg.dim
    return build_algebra(c, factors, labels)


ALGEBRA_PRESETS = {
    "su2": su2,
    "u1": u1,
    "su2xu1": lambda: direct_sum(su2(), u1()),
}


def algebra_preset(name: str) -> LieAlgebraData:
    """Return a named algebra."""
    if name not in ALGEBRA_PRESETS:
        raise InputError(f"unknown algebra preset: {name}")
    return ALGEBRA_PRESETS[name]()


def validate_algebra(data: LieAlgebraData, cfg: Optional[Config] = None) -> AlgebraValidation:
    """Check antisymmetry, the Jacobi identity and the direct-sum block structure."""
    cfg = cfg or default_config()
    c = data.structure_constants
    if c.shape != (data.dim,) * 3:
        raise InputError(f"structure constants shape {c.shape} does not match dim {data.dim}")

    antisymmetry = float(np.max(np.abs(c + c.transpose(1, 0, 2)), initial=0.0))

    jacobi = (
        np.einsum("abm,mek->abek", c, c)
        + np.einsum("bem,mak->abek", c, c)
        + np.einsum("eam,mbk->abek", c, c)
    )
    jacobi_residual = float(np.max(np.abs(jacobi), initial=0.0))

    # Entries outside the diagonal blocks, plus everything in abelian blocks
    mask = np.ones_like(c, dtype=bool)
    for f in data.factors:
        if f.kind == SIMPLE:
            idx = np.ix_(f.indices, f.indices, f.indices)
            mask[idx] = False
    block_residual = float(np.max(np.abs(c[mask]), initial=0.0))

    report = AlgebraValidation(
        antisymmetry_residual=antisymmetry,
        jacobi_residual=jacobi_residual,
        block_residual=block_residual,
        tolerance=cfg.tol_alg,
    )
    if antisymmetry > cfg.tol_alg:
        report.problems.append(f"antisymmetry violated: {antisymmetry:.3e}")
    if jacobi_residual > cfg.tol_alg:
        report.problems.append(f"Jacobi identity violated: {jacobi_residual:.3e}")
    if block_residual > cfg.tol_alg:
        report.problems.append(f"direct-sum block structure violated: {block_residual:.3e}")
    return report


def ad_matrix(data: LieAlgebraData, x) -> np.ndarray:
    """Return ad_x with (ad_x)[k][b] = sum_a x[a] c[a][b][k]."""
    x = np.asarray(x, dtype=float)
    if x.shape != (data.dim,):
        raise InputError(f"coefficient vector must have length {data.dim}")
    return np.einsum("a,abk->kb", x, data.structure_constants)


def ad_matrices(data: LieAlgebraData) -> np.ndarray:
    """Stack of ad_{e_a} for every basis vector, shape (d, d, d)."""
    return np.transpose(data.structure_constants, (0, 2, 1)).copy()


def killing_form(data: LieAlgebraData) -> np.ndarray:
    """kappa[a][b] = trace(ad_{e_a} ad_{e_b})."""
    c = data.structure_constants
    kappa = np.einsum("amk,bkm->ab", c, c)
    return 0.5 * (kappa + kappa.T)


def ad_invariance_residual(data: LieAlgebraData, form: np.ndarray) -> float:
    """max |beta(ad_X Y, Z) + beta(Y, ad_X Z)| over basis triples."""
    residual = 0.0
    for ad in ad_matrices(data):
        residual = max(residual, float(np.max(np.abs(ad.T @ form + form @ ad), initial=0.0)))
    return residual


def build_invariant_form(
    data: LieAlgebraData,
    couplings: Sequence[float],
    cfg: Optional[Config] = None,
) -> InvariantForm:
    """Build beta = sum_k g_k^{-2} B_k over the factor blocks."""
    cfg = cfg or default_config()
    couplings = [float(g) for g in couplings]
    if len(couplings) != len(data.factors):
        raise InputError(
            f"expected {len(data.factors)} couplings (one per factor), got {len(couplings)}"
        )
    for g in couplings:
        if not g > 0:
            raise InputError(f"couplings must be positive, got {g}")

    kappa = killing_form(data)
    block_form = np.zeros((data.dim, data.dim))
    beta = np.zeros((data.dim, data.dim))
    for f, g in zip(data.factors, couplings):
        idx = np.ix_(f.indices, f.indices)
        if f.kind == ABELIAN:
            block = np.eye(len(f.indices))
        else:
            negative = -kappa[idx]
            eigenvalues = linalg.eigvalsh(negative)
            if eigenvalues[0] <= cfg.tol_alg:
                raise InputError(
                    f"Killing form is not definite on factor {list(f.indices)} tagged simple"
                )
            # the supplied basis must be orthonormal for -kappa up to one overall scale
            scale = float(np.mean(np.diag(negative)))
            block = negative / scale
            deviation = float(np.max(np.abs(block - np.eye(len(f.indices)))))
            if deviation > cfg.tol_alg:
                raise InputError(
                    f"basis of factor {list(f.indices)} is not Killing-orthonormal up to scale: "
                    f"deviation {deviation:.3e}"
                )
        block_form[idx] = block
        beta[idx] = block / g ** 2

    residual = ad_invariance_residual(data, beta)
    if residual > cfg.tol_alg * max(1.0, float(np.max(np.abs(beta)))):
        raise InputError(f"invariant form is not ad-invariant: residual {residual:.3e}")

    logger.debug(f"Invariant form for couplings {couplings}: ad residual {residual:.3e}")
    return InvariantForm(matrix=beta, couplings=tuple(couplings), block_form=block_form, ad_residual=residual)


def change_basis(data: LieAlgebraData, p: np.ndarray) -> LieAlgebraData:
    """Structure constants in the basis e'_i = sum_a P[a][i] e_a."""
    p = np.asarray(p, dtype=float)
    if p.shape != (data.dim, data.dim):
        raise InputError(f"basis change must be {data.dim} x {data.dim}")
    p_inv = linalg.inv(p)
    c = np.einsum("ai,bj,abk,lk->ijl", p, p, data.structure_constants, p_inv)
    return build_algebra(c, data.factors)
