"""
Higgs and Yang-Mills mass matrices, grouped spectra and the full vacuum analysis.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy import linalg

from app.breaking.models import GaugeInvarianceReport, GroupedSpectrum, SpectralGroup, VacuumAnalysis
from app.breaking.spaces import complement, goldstone_space, phys_space, stabilizer
from app.config import Config, default_config
from app.errors import DegenerateMinimumError, InputError
from app.liealg.models import InvariantForm
from app.potential.models import Potential
from app.potential.potential import hessian
from app.rep.models import Representation
from app.rep.representation import random_group_element
from app.sweeps import sweep

logger = logging.getLogger(__name__)


def group_spectrum(eigenvalues, eigenvectors, cfg: Optional[Config] = None) -> GroupedSpectrum:
    """Merge ascending eigenvalues whose consecutive gaps are within tol_group.

    A group's value is the mean of its members; chains of close eigenvalues
    merge into one group.
    """
    cfg = cfg or default_config()
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    eigenvectors = np.asarray(eigenvectors, dtype=float)
    if eigenvalues.size == 0:
        return GroupedSpectrum(groups=[], tolerance=cfg.tol_group(0.0), eigenvalues=eigenvalues)

    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]
    tolerance = cfg.tol_group(float(np.max(np.abs(eigenvalues))))

    groups = []
    start = 0
    for i in range(1, eigenvalues.size + 1):
        if i == eigenvalues.size or eigenvalues[i] - eigenvalues[i - 1] > tolerance:
            members = eigenvalues[start:i]
            value = float(np.mean(members))
            if abs(value) <= tolerance:
                value = 0.0
            groups.append(SpectralGroup(eigenvalue=value, multiplicity=i - start, basis=eigenvectors[:, start:i]))
            start = i
    return GroupedSpectrum(groups=groups, tolerance=tolerance, eigenvalues=eigenvalues)


def mass_matrix_higgs(
    potential: Potential,
    z0,
    cfg: Optional[Config] = None,
) -> Tuple[np.ndarray, GroupedSpectrum]:
    """M^2_H = Hess V(z0) with its grouped spectrum; must be positive semidefinite."""
    cfg = cfg or default_config()
    m2 = hessian(potential, z0, cfg)
    eigenvalues, eigenvectors = linalg.eigh(m2)
    scale = max(1.0, float(np.max(np.abs(eigenvalues), initial=0.0)))
    if eigenvalues.size and eigenvalues[0] < -cfg.tol_eig * scale:
        raise DegenerateMinimumError(
            f"Higgs mass matrix has a negative eigenvalue {eigenvalues[0]:.3e}; z0 is not a minimum"
        )
    return m2, group_spectrum(eigenvalues, eigenvectors, cfg)


def gauge_gram(rep: Representation, z0) -> np.ndarray:
    """G_ab = 2 (T_a z0) . (T_b z0)."""
    tangents = rep.orbit_tangents(z0)
    return 2.0 * tangents.T @ tangents


def mass_matrix_ym(
    rep: Representation,
    z0,
    beta: InvariantForm,
    cfg: Optional[Config] = None,
) -> Tuple[np.ndarray, GroupedSpectrum, np.ndarray]:
    """M^2_YM = beta^{-1} G, beta-self-adjoint; spectrum from the pencil (G, beta).

    Returns the matrix, its grouped spectrum (beta-orthonormal eigenvectors)
    and the Gram matrix G.
    """
    cfg = cfg or default_config()
    z0 = np.asarray(z0, dtype=float)
    if z0.shape != (rep.n,):
        raise InputError(f"Higgs state must have length {rep.n}")
    if beta.matrix.shape != (rep.algebra.dim, rep.algebra.dim):
        raise InputError("invariant form does not match the algebra dimension")

    gram = gauge_gram(rep, z0)
    m2 = linalg.solve(beta.matrix, gram, assume_a="pos")
    eigenvalues, eigenvectors = linalg.eigh(gram, beta.matrix)
    return m2, group_spectrum(eigenvalues, eigenvectors, cfg), gram


def analyze_vacuum(
    rep: Representation,
    potential: Potential,
    z0,
    beta: InvariantForm,
    cfg: Optional[Config] = None,
) -> VacuumAnalysis:
    """Stabilizer, W_G / W_phys split and both mass spectra at a minimum z0."""
    cfg = cfg or default_config()
    z0 = np.asarray(z0, dtype=float)
    if rep.n != potential.n:
        raise InputError(f"representation acts on R^{rep.n}, potential on R^{potential.n}")

    lie_h = stabilizer(rep, z0, beta.block_form, cfg)
    lie_h_perp = complement(lie_h, beta.block_form, cfg)
    w_goldstone = goldstone_space(rep, z0, lie_h_perp, cfg)
    w_phys = phys_space(w_goldstone, rep.n, cfg)

    m2_higgs, higgs_spectrum = mass_matrix_higgs(potential, z0, cfg)
    m2_ym, ym_spectrum, gram = mass_matrix_ym(rep, z0, beta, cfg)

    logger.info(
        f"Vacuum analysis: dim H = {lie_h.shape[1]}, dim W_G = {w_goldstone.shape[1]}, "
        f"dim W_phys = {w_phys.shape[1]}"
    )
    return VacuumAnalysis(
        z0=z0.copy(),
        beta=beta,
        lie_h=lie_h,
        lie_h_perp=lie_h_perp,
        w_goldstone=w_goldstone,
        w_phys=w_phys,
        m2_higgs=m2_higgs,
        m2_ym=m2_ym,
        gram=gram,
        higgs_spectrum=higgs_spectrum,
        ym_spectrum=ym_spectrum,
    )


def adjoint_action(rep: Representation, g) -> np.ndarray:
    """Matrix A with R^T T_a R = sum_b A[b][a] T_b, i.e. Ad_{g^{-1}}, by least squares."""
    r = g.matrix
    d = rep.algebra.dim
    basis = rep.generators.reshape(d, -1).T
    conjugated = np.einsum("ji,ajk,kl->ail", r, rep.generators, r).reshape(d, -1).T
    solution, _, _, _ = linalg.lstsq(basis, conjugated)
    return solution


def spectrum_gauge_invariance(
    rep: Representation,
    potential: Potential,
    z0,
    beta: InvariantForm,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    cfg: Optional[Config] = None,
) -> GaugeInvarianceReport:
    """Both spectra are constant on the orbit of z0 and both matrices transform covariantly.

    M^2_H(rho(g) z0) = R M^2_H(z0) R^T and M^2_YM(rho(g) z0) = A^{-1} M^2_YM(z0) A
    with R = rho(g) and A = Ad_{g^{-1}}.
    """
    cfg = cfg or default_config()
    trials = cfg.trials if trials is None else trials
    seed = cfg.seed if seed is None else seed
    z0 = np.asarray(z0, dtype=float)

    m2_higgs = hessian(potential, z0, cfg)
    m2_ym, _, gram = mass_matrix_ym(rep, z0, beta, cfg)
    base_higgs = linalg.eigvalsh(m2_higgs)
    base_ym = linalg.eigvalsh(gram, beta.matrix)
    scale = 1.0 + max(float(np.max(np.abs(base_higgs), initial=0.0)), float(np.max(np.abs(base_ym), initial=0.0)))

    def trial(trial_seed: int) -> Tuple[float, float, float]:
        g = random_group_element(rep, trial_seed)
        z = g.act(z0)
        moved_higgs = hessian(potential, z, cfg)
        moved_ym, _, moved_gram = mass_matrix_ym(rep, z, beta, cfg)

        deviation = max(
            float(np.max(np.abs(linalg.eigvalsh(moved_higgs) - base_higgs), initial=0.0)),
            float(np.max(np.abs(linalg.eigvalsh(moved_gram, beta.matrix) - base_ym), initial=0.0)),
        )
        r = g.matrix
        higgs_cov = float(np.max(np.abs(moved_higgs - r @ m2_higgs @ r.T), initial=0.0))
        a = adjoint_action(rep, g)
        ym_cov = float(np.max(np.abs(moved_ym - linalg.solve(a, m2_ym @ a)), initial=0.0))
        return deviation, higgs_cov, ym_cov

    results = sweep(trial, seed, trials, cfg.parallel)
    report = GaugeInvarianceReport(
        max_spectral_deviation=max((r[0] for r in results), default=0.0),
        higgs_covariance_residual=max((r[1] for r in results), default=0.0),
        ym_covariance_residual=max((r[2] for r in results), default=0.0),
        trials=trials,
        tolerance=cfg.tol_spec,
        scale=scale,
    )
    logger.debug(f"Spectrum gauge invariance over {trials} trials: {report.to_dict()}")
    return report
