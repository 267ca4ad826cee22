"""
Structural identities at a vacuum: Goldstone theorem, rank identities,
residual symmetry, fluctuation mass terms and normal gradients.
"""

import logging
from typing import List, Optional

import numpy as np
from scipy import linalg

from app.breaking.models import (
    ExtractedMass,
    FluctuationCheck,
    IdentityCheck,
    NormalGradientReport,
    PhysicalHiggsMassCheck,
    RankIdentityReport,
    ResidualSymmetryReport,
    VacuumAnalysis,
)
from app.breaking.spaces import grading_condition
from app.config import Config, default_config
from app.errors import InputError
from app.liealg.algebra import ad_matrix
from app.potential.models import Potential
from app.potential.potential import evaluate, fd_gradient, hessian, radial_critical_function, radial_profile
from app.rep.models import Representation
from app.rep.representation import random_group_element
from app.sweeps import trial_seeds

logger = logging.getLogger(__name__)

_RADIUS_ONE = 1e-6


def _count(expected: int, got: int, name: str) -> IdentityCheck:
    return IdentityCheck(name=name, expected=float(expected), got=float(got), passed=expected == got)


def rank_identities(analysis: VacuumAnalysis, cfg: Optional[Config] = None) -> RankIdentityReport:
    """Goldstone theorem and the rank identities tying both spectra to W_G, W_phys and H."""
    cfg = cfg or default_config()
    report = RankIdentityReport()
    higgs = analysis.higgs_spectrum
    ym = analysis.ym_spectrum

    report.checks.append(_count(analysis.dim_goldstone, analysis.dim - analysis.dim_h, "dim W_G = d - h"))
    report.checks.append(_count(analysis.dim_goldstone, higgs.massless_multiplicity(), "dim ker M2_H = dim W_G"))
    report.checks.append(_count(analysis.dim_phys, higgs.rank, "rank M2_H = dim W_phys"))
    report.checks.append(_count(analysis.dim_goldstone, ym.rank, "rank M2_YM = dim W_G"))
    report.checks.append(_count(analysis.dim_h, ym.massless_multiplicity(), "massless gauge bosons = dim H"))

    norm = float(np.max(np.abs(higgs.eigenvalues), initial=0.0))
    if analysis.dim_goldstone:
        annihilation = float(np.max(np.linalg.norm(analysis.m2_higgs @ analysis.w_goldstone, axis=0)))
    else:
        annihilation = 0.0
    threshold = cfg.tol_eig * norm if norm > 0 else cfg.tol_eig
    report.checks.append(
        IdentityCheck(
            name="M2_H annihilates W_G",
            expected=0.0,
            got=annihilation,
            residual=annihilation,
            passed=annihilation <= threshold,
        )
    )

    for check in report.failures():
        logger.warning(f"Identity failed: {check.name} (expected {check.expected}, got {check.got})")
    return report


def residual_invariance(
    rep: Representation,
    analysis: VacuumAnalysis,
    cfg: Optional[Config] = None,
) -> ResidualSymmetryReport:
    """W_G and W_phys are H-invariant and both mass matrices commute with the stabilizer."""
    cfg = cfg or default_config()
    p_goldstone = analysis.w_goldstone @ analysis.w_goldstone.T
    p_phys = analysis.w_phys @ analysis.w_phys.T
    eye = np.eye(analysis.n)

    goldstone = phys = higgs_comm = ym_comm = 0.0
    for tau in analysis.lie_h.T:
        t = rep.generator(tau)
        ad = ad_matrix(rep.algebra, tau)
        if analysis.dim_goldstone:
            goldstone = max(goldstone, float(np.max(np.abs((eye - p_goldstone) @ t @ analysis.w_goldstone))))
        if analysis.dim_phys:
            phys = max(phys, float(np.max(np.abs((eye - p_phys) @ t @ analysis.w_phys))))
        higgs_comm = max(higgs_comm, float(np.max(np.abs(t @ analysis.m2_higgs - analysis.m2_higgs @ t))))
        ym_comm = max(ym_comm, float(np.max(np.abs(ad @ analysis.m2_ym - analysis.m2_ym @ ad))))

    scale = 1.0 + max(
        float(np.max(np.abs(analysis.m2_higgs), initial=0.0)),
        float(np.max(np.abs(analysis.m2_ym), initial=0.0)),
    )
    return ResidualSymmetryReport(
        goldstone_residual=goldstone,
        phys_residual=phys,
        higgs_commutator=higgs_comm / scale,
        ym_commutator=ym_comm / scale,
        grading_ok=grading_condition(analysis.n, analysis.dim, analysis.dim_h),
        tolerance=cfg.tol_spec,
    )


def physical_higgs_mass(
    potential: Potential,
    analysis: VacuumAnalysis,
    cfg: Optional[Config] = None,
) -> PhysicalHiggsMassCheck:
    """f_H''(r0) equals the Hessian along the radial direction e = z0 / |z0|."""
    cfg = cfg or default_config()
    if not potential.is_rotsym:
        raise InputError("physical Higgs mass requires a rotationally symmetric potential")
    r0 = float(np.linalg.norm(analysis.z0))
    if r0 <= cfg.tol_zero:
        raise InputError("physical Higgs mass is undefined at z0 = 0")

    e = analysis.z0 / r0
    _, _, expected = radial_profile(potential, r0)
    got = float(e @ analysis.m2_higgs @ e)
    residual = float(np.linalg.norm(analysis.m2_higgs @ e - expected * e)) / (1.0 + abs(expected))
    return PhysicalHiggsMassCheck(
        expected=expected,
        got=got,
        residual=residual,
        passed=residual <= cfg.tol_eig,
    )


def fluctuation_mass_check(
    potential: Potential,
    rep: Representation,
    analysis: VacuumAnalysis,
    phi_phys,
    a_vec,
    cfg: Optional[Config] = None,
) -> FluctuationCheck:
    """Quadratic mass terms of a fluctuation (z0 + phi_phys, a).

    The coefficient of t^2 in V(z0 + t phi_phys) is 1/2 phi^T M2_H phi, and
    |rho'(a) z0|^2 = 1/2 beta(M2_YM a, a).
    """
    cfg = cfg or default_config()
    z0 = analysis.z0
    phi = np.asarray(phi_phys, dtype=float)
    a = np.asarray(a_vec, dtype=float)
    if phi.shape != (analysis.n,):
        raise InputError(f"phi_phys must have length {analysis.n}")
    if a.shape != (analysis.dim,):
        raise InputError(f"a_vec must have length {analysis.dim}")

    phi_norm = float(np.linalg.norm(phi))
    if analysis.dim_goldstone and phi_norm > 0:
        leak = float(np.linalg.norm(analysis.w_goldstone.T @ phi))
        if leak > cfg.tol_rank * phi_norm:
            raise InputError(f"phi_phys is not in W_phys: Goldstone component {leak:.3e}")

    if phi_norm > 0:
        h = 10.0 * cfg.fd_step * (1.0 + float(np.linalg.norm(z0))) / phi_norm
        v0 = evaluate(potential, z0)

        def second_difference(step: float) -> float:
            return (evaluate(potential, z0 + step * phi) + evaluate(potential, z0 - step * phi) - 2.0 * v0) / (
                2.0 * step ** 2
            )

        coefficient = (4.0 * second_difference(h / 2.0) - second_difference(h)) / 3.0
    else:
        coefficient = 0.0
    expected = 0.5 * float(phi @ analysis.m2_higgs @ phi)
    higgs_residual = abs(coefficient - expected) / (1.0 + abs(expected))

    shift = rep.generator(a) @ z0
    lhs = float(shift @ shift)
    rhs = 0.5 * analysis.beta.inner(analysis.m2_ym @ a, a)
    gauge_residual = abs(lhs - rhs) / (1.0 + abs(lhs))

    return FluctuationCheck(
        higgs_coefficient=coefficient,
        higgs_expected=expected,
        higgs_residual=higgs_residual,
        gauge_lhs=lhs,
        gauge_rhs=rhs,
        gauge_residual=gauge_residual,
        passed=higgs_residual <= cfg.tol_fluct and gauge_residual <= cfg.tol_eig,
    )


def _exp_derivative(f, h: float) -> float:
    """d/dt f(t) at 0: central difference with one Richardson level."""

    def central(step: float) -> float:
        return (f(step) - f(-step)) / (2.0 * step)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def _orbit_velocities(rep: Representation, z0: np.ndarray, h: float) -> np.ndarray:
    """Columns d/dt exp(t T_a) z0 at t = 0, by central differences with one Richardson level."""

    def central(generator: np.ndarray, step: float) -> np.ndarray:
        return (linalg.expm(step * generator) @ z0 - linalg.expm(-step * generator) @ z0) / (2.0 * step)

    columns = [(4.0 * central(t, h / 2.0) - central(t, h)) / 3.0 for t in rep.generators]
    return np.column_stack(columns) if columns else np.zeros((rep.n, 0))


def extracted_masses(
    rep: Representation,
    analysis: VacuumAnalysis,
    cfg: Optional[Config] = None,
) -> List[ExtractedMass]:
    """Gauge boson masses rebuilt from the orbit of z0, matched against the M2_YM spectrum.

    Orbit velocities come from finite differences of exp(t T_a) z0 and their Gram
    matrix is diagonalized in the Cholesky frame of beta. Each massive eigenvector
    eta gives m^2 = 2 g_phys^2 |T_eta z0|^2 with g_phys^-2 = beta(eta_hat, eta_hat),
    compared with the eigenvalue of the same rank from eigh(G, beta).
    """
    cfg = cfg or default_config()
    z0 = analysis.z0
    block = analysis.beta.block_form
    velocities = _orbit_velocities(rep, z0, 10.0 * cfg.fd_step)

    lower = linalg.cholesky(analysis.beta.matrix, lower=True)
    frame = linalg.solve_triangular(lower, np.eye(lower.shape[0]), lower=True)
    reduced = frame @ (2.0 * velocities.T @ velocities) @ frame.T
    _, vectors = np.linalg.eigh(0.5 * (reduced + reduced.T))

    spectrum = analysis.ym_spectrum
    masses = []
    for m2, xi in zip(spectrum.eigenvalues, vectors.T):
        if abs(m2) <= spectrum.tolerance:
            continue
        # eta is beta-orthonormal; eta_hat is its B-normalized rescaling
        eta = frame.T @ xi
        eta_hat = eta / np.sqrt(float(eta @ block @ eta))
        g_phys = float(1.0 / np.sqrt(analysis.beta.inner(eta_hat, eta_hat)))
        goldstone_norm = float(np.linalg.norm(velocities @ eta_hat))
        predicted = 2.0 * g_phys ** 2 * goldstone_norm ** 2
        residual = float(abs(m2 - predicted) / (1.0 + abs(m2)))
        masses.append(ExtractedMass(m2=float(m2), g_phys=g_phys, goldstone_norm=goldstone_norm, residual=residual))
    return masses


def normal_gradient_checks(
    potential: Potential,
    rep: Representation,
    analysis: VacuumAnalysis,
    trials: int = 5,
    seed: int = 0,
    cfg: Optional[Config] = None,
) -> NormalGradientReport:
    """Gradients of the critical-set functions and the per-boson mass formula.

    Higgs part: grad F_H = M2_H e along the orbit of z0, with F_H = grad V . z;
    asserted only when |z0| = 1. Gauge part: d/dt (T_eta' z0) . exp(-t T_eta) z0
    at t = 0 equals -1/2 beta(M2_YM eta, eta') on every basis pair.
    """
    cfg = cfg or default_config()
    z0 = analysis.z0
    r0 = float(np.linalg.norm(z0))
    note = ""

    higgs_applicable = potential.is_rotsym and r0 > cfg.tol_zero and abs(r0 - 1.0) <= _RADIUS_ONE
    higgs_residual: Optional[float] = None
    if potential.is_rotsym and r0 > cfg.tol_zero:
        points = [z0] + [random_group_element(rep, s).act(z0) for s in trial_seeds(seed, trials)]
        higgs_residual = 0.0
        for z in points:
            h = cfg.fd_step * (1.0 + float(np.linalg.norm(z)))
            grad_f = fd_gradient(lambda x: radial_critical_function(potential, x), z, h)
            predicted = hessian(potential, z, cfg) @ (z / np.linalg.norm(z))
            residual = float(np.max(np.abs(grad_f - predicted))) / (1.0 + float(np.linalg.norm(predicted)))
            higgs_residual = max(higgs_residual, residual)
        if not higgs_applicable:
            note = f"grad F_H = M2_H e holds only for |z0| = 1; |z0| = {r0:.6g}, reported without assertion"
    else:
        note = "Higgs normal gradient needs a rotationally symmetric potential and z0 != 0"

    directions = np.hstack([analysis.lie_h, analysis.lie_h_perp])
    t_dirs = [rep.generator(eta) for eta in directions.T]
    h = 10.0 * cfg.fd_step
    ym_residual = 0.0
    scale = 1.0 + float(np.max(np.abs(analysis.gram), initial=0.0))
    for i, eta in enumerate(directions.T):
        for j, eta_prime in enumerate(directions.T):
            target = t_dirs[j] @ z0
            derivative = _exp_derivative(lambda t: float(target @ linalg.expm(-t * t_dirs[i]) @ z0), h)
            expected = -0.5 * analysis.beta.inner(analysis.m2_ym @ eta, eta_prime)
            ym_residual = max(ym_residual, float(abs(derivative - expected) / scale))

    report = NormalGradientReport(
        higgs_applicable=higgs_applicable,
        higgs_residual=higgs_residual,
        ym_residual=ym_residual,
        masses=extracted_masses(rep, analysis, cfg),
        tolerance=cfg.tol_fluct,
        note=note,
    )
    if note:
        logger.info(note)
    return report
