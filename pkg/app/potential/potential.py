"""
Higgs potentials: evaluation, derivatives, invariance and boundedness checks.
"""

import logging
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from app.config import Config, default_config
from app.errors import InputError
from app.potential.models import GENERAL, ROTSYM, InvarianceCheck, Potential
from app.rep.models import Representation
from app.rep.representation import random_group_element
from app.sweeps import sweep_max, trial_seeds

logger = logging.getLogger(__name__)


def rotsym_potential(coefficients: Sequence[float], n: int) -> Potential:
    """V(z) = p(|z|^2) with p = sum_k coefficients[k] u^k."""
    coefficients = tuple(float(c) for c in coefficients)
    if not coefficients:
        raise InputError("coefficients are required")
    if n < 1:
        raise InputError("n must be positive")
    return Potential(kind=ROTSYM, n=n, coefficients=coefficients)


def mexican_hat(n: int, vev: float = 1.0) -> Potential:
    """(vev^2 - |z|^2)^2, minimal on the sphere of radius vev."""
    v2 = float(vev) ** 2
    return rotsym_potential((v2 * v2, -2.0 * v2, 1.0), n)


def general_potential(
    n: int,
    value_fn: Callable[[np.ndarray], float],
    gradient_fn: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    hessian_fn: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> Potential:
    """Black-box potential; missing derivatives fall back to finite differences."""
    if value_fn is None:
        raise InputError("value_fn is required")
    return Potential(kind=GENERAL, n=n, value_fn=value_fn, gradient_fn=gradient_fn, hessian_fn=hessian_fn)


def _check_point(potential: Potential, z) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if z.shape != (potential.n,):
        raise InputError(f"point must have length {potential.n}, got shape {z.shape}")
    if not np.all(np.isfinite(z)):
        raise InputError("point must be finite")
    return z


def _p_derivatives(potential: Potential, u: float) -> Tuple[float, float, float]:
    c = np.asarray(potential.coefficients)
    return (
        float(P.polyval(u, c)),
        float(P.polyval(u, P.polyder(c, 1))) if c.size > 1 else 0.0,
        float(P.polyval(u, P.polyder(c, 2))) if c.size > 2 else 0.0,
    )


def fd_step(cfg: Config, z: np.ndarray) -> float:
    """h_fd = fd_step * (1 + |z|)."""
    return cfg.fd_step * (1.0 + float(np.linalg.norm(z)))


def fd_gradient(f: Callable[[np.ndarray], float], z: np.ndarray, h: float) -> np.ndarray:
    """Central differences with one Richardson extrapolation level."""
    n = z.size
    eye = np.eye(n)

    def central(step: float) -> np.ndarray:
        return np.array([(f(z + step * eye[i]) - f(z - step * eye[i])) / (2.0 * step) for i in range(n)])

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def fd_hessian(f: Callable[[np.ndarray], float], z: np.ndarray, h: float) -> np.ndarray:
    """Second-order central differences of a scalar function, Richardson-extrapolated."""
    n = z.size
    eye = np.eye(n)
    f0 = f(z)

    def second(step: float) -> np.ndarray:
        hess = np.zeros((n, n))
        for i in range(n):
            ei = step * eye[i]
            hess[i, i] = (f(z + ei) - 2.0 * f0 + f(z - ei)) / step ** 2
            for j in range(i + 1, n):
                ej = step * eye[j]
                value = (f(z + ei + ej) - f(z + ei - ej) - f(z - ei + ej) + f(z - ei - ej)) / (4.0 * step ** 2)
                hess[i, j] = hess[j, i] = value
        return hess

    return (4.0 * second(h / 2.0) - second(h)) / 3.0


def fd_jacobian(f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float) -> np.ndarray:
    """Jacobian of a vector function, columns by central differences with Richardson."""
    n = z.size
    eye = np.eye(n)

    def central(step: float) -> np.ndarray:
        cols = [(f(z + step * eye[i]) - f(z - step * eye[i])) / (2.0 * step) for i in range(n)]
        return np.column_stack(cols)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def evaluate(potential: Potential, z) -> float:
    """V(z)."""
    z = _check_point(potential, z)
    if potential.is_rotsym:
        return _p_derivatives(potential, float(z @ z))[0]
    return float(potential.value_fn(z))


def gradient(potential: Potential, z, cfg: Optional[Config] = None) -> np.ndarray:
    """grad V(z); rotsym: 2 p'(u) z."""
    z = _check_point(potential, z)
    if potential.is_rotsym:
        _, dp, _ = _p_derivatives(potential, float(z @ z))
        return 2.0 * dp * z
    if potential.gradient_fn is not None:
        return np.asarray(potential.gradient_fn(z), dtype=float)
    cfg = cfg or default_config()
    return fd_gradient(lambda x: evaluate(potential, x), z, fd_step(cfg, z))


def hessian(potential: Potential, z, cfg: Optional[Config] = None) -> np.ndarray:
    """Hess V(z); rotsym: 2 p'(u) I + 4 p''(u) z z^T."""
    z = _check_point(potential, z)
    if potential.is_rotsym:
        _, dp, ddp = _p_derivatives(potential, float(z @ z))
        return 2.0 * dp * np.eye(potential.n) + 4.0 * ddp * np.outer(z, z)
    if potential.hessian_fn is not None:
        hess = np.asarray(potential.hessian_fn(z), dtype=float)
        return 0.5 * (hess + hess.T)
    cfg = cfg or default_config()
    h = fd_step(cfg, z)
    if potential.gradient_fn is not None:
        hess = fd_jacobian(lambda x: gradient(potential, x, cfg), z, h)
    else:
        hess = fd_hessian(lambda x: evaluate(potential, x), z, h)
    return 0.5 * (hess + hess.T)


def radial_profile(potential: Potential, r: float) -> Tuple[float, float, float]:
    """f_H(r) = p(r^2) with its first and second derivatives in r."""
    if not potential.is_rotsym:
        raise InputError("radial profile requires a rotationally symmetric potential")
    u = float(r) ** 2
    p, dp, ddp = _p_derivatives(potential, u)
    return p, 2.0 * r * dp, 2.0 * dp + 4.0 * u * ddp


def radial_critical_function(potential: Potential, z) -> float:
    """F_H(z) = grad V(z) . z = f_H'(r) r; vanishes exactly on the critical set."""
    if not potential.is_rotsym:
        raise InputError("radial critical function requires a rotationally symmetric potential")
    z = _check_point(potential, z)
    r = float(np.linalg.norm(z))
    if r == 0.0:
        raise InputError("radial critical function is undefined at z = 0")
    return float(gradient(potential, z) @ z)


def check_invariance(
    potential: Potential,
    rep: Representation,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    cfg: Optional[Config] = None,
) -> InvarianceCheck:
    """max over random (g, z) of |V(rho(g) z) - V(z)| / (1 + |V(z)|)."""
    cfg = cfg or default_config()
    trials = cfg.trials if trials is None else trials
    seed = cfg.seed if seed is None else seed
    if rep.n != potential.n:
        raise InputError(f"representation acts on R^{rep.n}, potential on R^{potential.n}")

    def trial(trial_seed: int) -> float:
        rng = np.random.default_rng(trial_seed)
        z = rng.standard_normal(potential.n)
        g = random_group_element(rep, int(rng.integers(2 ** 32)))
        v = evaluate(potential, z)
        return abs(evaluate(potential, g.act(z)) - v) / (1.0 + abs(v))

    residual = sweep_max(trial, seed, trials, cfg.parallel)
    check = InvarianceCheck(max_residual=residual, trials=trials, tolerance=cfg.tol_inv)
    logger.debug(f"Invariance check: residual {residual:.3e} over {trials} trials")
    return check


def check_bounded_below(
    potential: Potential,
    trials: int = 20,
    seed: int = 0,
) -> bool:
    """Advisory boundedness check; never raises."""
    if potential.is_rotsym:
        coefficients = np.trim_zeros(np.asarray(potential.coefficients), "b")
        bounded = coefficients.size <= 1 or coefficients[-1] > 0
    else:
        bounded = True
        for trial_seed in trial_seeds(seed, trials):
            direction = np.random.default_rng(trial_seed).standard_normal(potential.n)
            direction /= np.linalg.norm(direction)
            values = [evaluate(potential, t * direction) for t in (1.0, 10.0, 100.0, 1000.0)]
            if values[-1] < min(values[:-1]):
                bounded = False
                break
    if not bounded:
        logger.warning("Potential does not look bounded from below on sampled rays")
    return bounded
