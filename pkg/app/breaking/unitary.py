"""
Unitary gauge: rotating a Higgs state so that it has no Goldstone component.

For a rotationally symmetric potential the vacuum can be rescaled along the
state itself. In general a group element g is sought that maximizes
Theta(g) = z0 . rho(g)^{-1} phi; at a maximum rho(g)^{-1} phi is orthogonal to
every T_eta z0 with eta in the complement of the stabilizer.
"""

import logging
from typing import Optional

import numpy as np
from scipy import linalg

from app.breaking.models import UnitaryGaugeElement, UnitaryGaugeVacuum
from app.breaking.spaces import complement, goldstone_space, stabilizer
from app.config import Config, default_config
from app.errors import ConvergenceError, InputError
from app.rep.models import GroupElement, Representation
from app.rep.representation import random_group_element
from app.sweeps import trial_seeds

logger = logging.getLogger(__name__)

_ARMIJO = 1e-4
_MIN_STEP = 1e-14


def _nonzero_states(z0, phi, cfg: Config):
    z0 = np.asarray(z0, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if z0.shape != phi.shape:
        raise InputError(f"z0 and phi must have the same shape, got {z0.shape} and {phi.shape}")
    z_norm = float(np.linalg.norm(z0))
    phi_norm = float(np.linalg.norm(phi))
    if z_norm <= cfg.tol_zero:
        raise InputError("unitary gauge is undefined for z0 = 0")
    if phi_norm <= cfg.tol_zero:
        raise InputError("unitary gauge is undefined for a vanishing Higgs state")
    return z0, phi, z_norm, phi_norm


def unitary_gauge_rotsym(
    rep: Representation,
    z0,
    phi,
    block_form: Optional[np.ndarray] = None,
    cfg: Optional[Config] = None,
) -> UnitaryGaugeVacuum:
    """nu = (|z0| / |phi|) phi, so that phi lies along nu and is orthogonal to W_G(nu)."""
    cfg = cfg or default_config()
    z0, phi, z_norm, phi_norm = _nonzero_states(z0, phi, cfg)
    if block_form is None:
        block_form = np.eye(rep.algebra.dim)

    nu = (z_norm / phi_norm) * phi
    lie_h = stabilizer(rep, nu, block_form, cfg)
    w_goldstone = goldstone_space(rep, nu, complement(lie_h, block_form, cfg), cfg)
    leak = float(np.max(np.abs(w_goldstone.T @ phi), initial=0.0))
    return UnitaryGaugeVacuum(nu=nu, scale=phi_norm / z_norm, goldstone_residual=leak)


def find_unitary_gauge_element(
    rep: Representation,
    z0,
    phi,
    lie_h_perp: np.ndarray,
    seed: Optional[int] = None,
    cfg: Optional[Config] = None,
) -> UnitaryGaugeElement:
    """Preconditioned ascent of Theta(R) = z0 . R^T phi over R = rho(g).

    Updates are R <- R expm(rho'(eta)) with eta in the stabilizer complement.
    The gradient coordinates are c_j = (T_{p_j} z0) . R^T phi and the step
    is K^{-1} c / s with K the Gram matrix of the T_{p_j} z0 and s = |phi| / |z0|,
    which is a Newton step near the maximum. Non-positive maxima restart from
    random group elements.
    """
    cfg = cfg or default_config()
    seed = cfg.seed if seed is None else seed
    z0, phi, z_norm, phi_norm = _nonzero_states(z0, phi, cfg)
    if z0.shape != (rep.n,):
        raise InputError(f"Higgs state must have length {rep.n}")

    directions = np.asarray(lie_h_perp, dtype=float)
    tangents = rep.orbit_tangents(z0) @ directions
    gram = tangents.T @ tangents
    ratio = phi_norm / z_norm
    gens = np.einsum("aj,aik->jik", directions, rep.generators) if directions.shape[1] else None

    starts = [None] + trial_seeds(seed, cfg.unitary_restarts)
    last_reason = ""
    for restart, start_seed in enumerate(starts):
        r = np.eye(rep.n) if start_seed is None else random_group_element(rep, start_seed, scale=2.0).matrix
        result = _ascend(r, z0, phi, tangents, gram, gens, ratio, cfg)
        if result is None:
            last_reason = f"no convergence within {cfg.unitary_max_iter} iterations"
            continue
        r, residual, theta, iterations = result
        if theta <= 0:
            last_reason = f"converged to a non-positive critical value {theta:.3e}"
            logger.debug(f"Unitary gauge restart {restart}: {last_reason}")
            continue
        logger.debug(f"Unitary gauge found after {iterations} iterations, {restart} restarts")
        return UnitaryGaugeElement(
            element=GroupElement(matrix=r),
            residual=residual,
            theta=theta,
            iterations=iterations,
            restarts=restart,
        )

    raise ConvergenceError("unitary_gauge", last_reason)


def _ascend(r, z0, phi, tangents, gram, gens, ratio: float, cfg: Config):
    psi = r.T @ phi
    theta = float(z0 @ psi)
    for iteration in range(cfg.unitary_max_iter + 1):
        grad = tangents.T @ psi
        residual = float(np.max(np.abs(grad), initial=0.0))
        if residual <= cfg.tol_crit:
            return r, residual, theta, iteration
        if iteration == cfg.unitary_max_iter:
            break

        direction = linalg.lstsq(gram, grad)[0] / ratio
        slope = float(grad @ direction)
        step = 1.0
        while True:
            candidate = r @ linalg.expm(step * np.einsum("j,jik->ik", direction, gens))
            candidate_psi = candidate.T @ phi
            candidate_theta = float(z0 @ candidate_psi)
            if candidate_theta >= theta + _ARMIJO * step * slope:
                break
            step *= 0.5
            if step < _MIN_STEP:
                return None
        r, psi, theta = candidate, candidate_psi, candidate_theta
    return None


def unitary_gauge_consistency(
    element: UnitaryGaugeElement,
    z0,
    phi,
) -> float:
    """max |rho(g)^{-1} phi - (|phi| / |z0|) z0| / |phi|; small when the orbit is a full sphere."""
    z0 = np.asarray(z0, dtype=float)
    phi = np.asarray(phi, dtype=float)
    psi = element.element.act_inverse(phi)
    target = (np.linalg.norm(phi) / np.linalg.norm(z0)) * z0
    return float(np.max(np.abs(psi - target))) / float(np.linalg.norm(phi))
