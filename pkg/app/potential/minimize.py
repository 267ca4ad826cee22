"""
Minimization of Higgs potentials with transversal Hessian certification.
"""

import logging
from typing import Optional

import numpy as np
from scipy import linalg

from app.config import Config, default_config
from app.errors import ConvergenceError, DegenerateMinimumError, InputError
from app.potential.models import Minimum, Potential
from app.potential.potential import evaluate, gradient, hessian
from app.rep.models import Representation

logger = logging.getLogger(__name__)

_ARMIJO = 1e-4
_MAX_STEP = 1e6
_MIN_STEP = 1e-30
_NEWTON_STEPS = 3


def orbit_normal_basis(rep: Representation, z0, cfg: Optional[Config] = None) -> np.ndarray:
    """Orthonormal basis of the complement of the orbit tangent space span{T_a z0}."""
    cfg = cfg or default_config()
    tangents = rep.orbit_tangents(z0)
    return linalg.null_space(tangents.T, rcond=cfg.tol_rank)


def certify_minimum(
    potential: Potential,
    rep: Representation,
    z0,
    cfg: Optional[Config] = None,
    iterations: int = 0,
) -> Minimum:
    """Check the gradient and the transversal Hessian at z0."""
    cfg = cfg or default_config()
    z0 = np.asarray(z0, dtype=float)
    grad_norm = float(np.linalg.norm(gradient(potential, z0, cfg)))
    hess = hessian(potential, z0, cfg)

    normal = orbit_normal_basis(rep, z0, cfg)
    if normal.shape[1] > 0:
        transversal = linalg.eigvalsh(normal.T @ hess @ normal)
    else:
        transversal = np.zeros(0)

    scale = max(1.0, float(np.max(np.abs(transversal), initial=0.0)))
    if transversal.size and transversal[0] <= cfg.tol_eig * scale:
        raise DegenerateMinimumError(
            f"transversal Hessian is not positive definite at z0: smallest eigenvalue {transversal[0]:.3e}"
        )

    return Minimum(
        z0=z0.copy(),
        value=evaluate(potential, z0),
        grad_norm=grad_norm,
        hessian=hess,
        transversal_spectrum=transversal,
        iterations=iterations,
    )


def minimize(
    potential: Potential,
    rep: Representation,
    init,
    cfg: Optional[Config] = None,
) -> Minimum:
    """Gradient descent with backtracking line search, then certification."""
    cfg = cfg or default_config()
    z = np.asarray(init, dtype=float).copy()
    if z.shape != (potential.n,):
        raise InputError(f"init must have length {potential.n}")
    if rep.n != potential.n:
        raise InputError(f"representation acts on R^{rep.n}, potential on R^{potential.n}")

    value = evaluate(potential, z)
    grad = gradient(potential, z, cfg)
    grad_norm = float(np.linalg.norm(grad))
    step = 1.0
    iteration = 0

    while grad_norm > cfg.tol_min:
        if iteration >= cfg.max_iter:
            raise ConvergenceError(
                "minimize", f"gradient norm {grad_norm:.3e} after {iteration} iterations"
            )
        iteration += 1

        step = min(2.0 * step, _MAX_STEP)
        while True:
            candidate = z - step * grad
            candidate_value = evaluate(potential, candidate)
            if candidate_value <= value - _ARMIJO * step * grad_norm ** 2:
                break
            # Near the floating-point floor of V the Armijo test is blind;
            # accept steps that still shrink the gradient
            if candidate_value <= value:
                candidate_grad_norm = float(np.linalg.norm(gradient(potential, candidate, cfg)))
                if candidate_grad_norm <= 0.9 * grad_norm:
                    break
            step *= 0.5
            if step < _MIN_STEP:
                raise ConvergenceError(
                    "minimize", f"line search failed at gradient norm {grad_norm:.3e}"
                )

        z = candidate
        value = candidate_value
        grad = gradient(potential, z, cfg)
        grad_norm = float(np.linalg.norm(grad))

    logger.debug(f"Gradient descent converged in {iteration} iterations: |grad| = {grad_norm:.3e}")
    z = _refine(potential, rep, z, grad_norm, cfg)
    return certify_minimum(potential, rep, z, cfg, iteration)


def _refine(potential: Potential, rep: Representation, z: np.ndarray, grad_norm: float, cfg: Config) -> np.ndarray:
    """Newton steps on the orbit normal space, kept only while the gradient shrinks."""
    for _ in range(_NEWTON_STEPS):
        if grad_norm == 0.0:
            break
        normal = orbit_normal_basis(rep, z, cfg)
        if normal.shape[1] == 0:
            break
        reduced = normal.T @ hessian(potential, z, cfg) @ normal
        try:
            step = normal @ linalg.solve(reduced, normal.T @ gradient(potential, z, cfg), assume_a="sym")
        except (linalg.LinAlgError, ValueError):
            break
        candidate = z - step
        candidate_norm = float(np.linalg.norm(gradient(potential, candidate, cfg)))
        if not candidate_norm < grad_norm:
            break
        z, grad_norm = candidate, candidate_norm
    return z
