"""
Shipped example models: abelian Higgs, electroweak and su(2) adjoint Higgs.

All presets use the mexican-hat potential (vev^2 - |z|^2)^2, so the vacuum
manifold is the sphere of radius vev and the physical Higgs mass is 8 vev^2.
"""

import logging
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from app.config import Config, default_config
from app.errors import InputError, NotFoundError
from app.liealg.algebra import algebra_preset, build_invariant_form
from app.potential.potential import mexican_hat
from app.presets.models import ModelPreset, PresetExpectations
from app.rep.representation import build_representation, realify

logger = logging.getLogger(__name__)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _couplings(given: Optional[Sequence[float]], count: int) -> tuple:
    if given is None:
        return (1.0,) * count
    couplings = tuple(float(g) for g in given)
    if len(couplings) != count:
        raise InputError(f"couplings must have {count} entries, got {len(couplings)}")
    return couplings


def _check_vev(vev: float) -> float:
    vev = float(vev)
    if not vev > 0:
        raise InputError(f"vev must be positive, got {vev}")
    return vev


def abelian_higgs(couplings: Optional[Sequence[float]] = None, vev: float = 1.0, cfg: Optional[Config] = None) -> ModelPreset:
    """u(1) acting on C = R^2 by multiplication with i."""
    cfg = cfg or default_config()
    vev = _check_vev(vev)
    (g,) = couplings = _couplings(couplings, 1)
    algebra = algebra_preset("u1")
    representation = realify(algebra, [np.array([[1j]])], cfg)
    return ModelPreset(
        name="abelian_higgs",
        algebra=algebra,
        representation=representation,
        potential=mexican_hat(2, vev),
        couplings=couplings,
        beta=build_invariant_form(algebra, couplings, cfg),
        vev=vev,
        vacuum_direction=np.array([1.0, 0.0]),
        expected=PresetExpectations(
            dim_h=0,
            dim_goldstone=1,
            massless_gauge=0,
            ym_spectrum=((2.0 * g ** 2 * vev ** 2, 1),),
            higgs_spectrum=((0.0, 1), (8.0 * vev ** 2, 1)),
        ),
    )


def electroweak(couplings: Optional[Sequence[float]] = None, vev: float = 1.0, cfg: Optional[Config] = None) -> ModelPreset:
    """su(2) + u(1) on the doublet C^2 = R^4; u(1) acts by the hypercharge phase i/2."""
    cfg = cfg or default_config()
    vev = _check_vev(vev)
    g, g_prime = couplings = _couplings(couplings, 2)
    algebra = algebra_preset("su2xu1")
    generators = [-0.5j * sigma for sigma in _PAULI] + [0.5j * np.eye(2)]
    representation = realify(algebra, generators, cfg)

    w_mass = 0.5 * g ** 2 * vev ** 2
    z_mass = 0.5 * (g ** 2 + g_prime ** 2) * vev ** 2
    return ModelPreset(
        name="electroweak",
        algebra=algebra,
        representation=representation,
        potential=mexican_hat(4, vev),
        couplings=couplings,
        beta=build_invariant_form(algebra, couplings, cfg),
        vev=vev,
        vacuum_direction=np.array([1.0, 0.0, 0.0, 0.0]),
        expected=PresetExpectations(
            dim_h=1,
            dim_goldstone=3,
            massless_gauge=1,
            ym_spectrum=((0.0, 1), (w_mass, 2), (z_mass, 1)),
            higgs_spectrum=((0.0, 3), (8.0 * vev ** 2, 1)),
        ),
        notes=["m_W^2 / m_Z^2 = g^2 / (g^2 + g'^2)"],
    )


def su2_adjoint(couplings: Optional[Sequence[float]] = None, vev: float = 1.0, cfg: Optional[Config] = None) -> ModelPreset:
    """su(2) acting on R^3 by the adjoint representation, (T_a)[k][b] = epsilon_abk."""
    cfg = cfg or default_config()
    vev = _check_vev(vev)
    (g,) = couplings = _couplings(couplings, 1)
    algebra = algebra_preset("su2")
    generators = np.transpose(algebra.structure_constants, (0, 2, 1))
    representation = build_representation(algebra, generators, cfg)
    mass = 2.0 * g ** 2 * vev ** 2
    return ModelPreset(
        name="su2_adjoint",
        algebra=algebra,
        representation=representation,
        potential=mexican_hat(3, vev),
        couplings=couplings,
        beta=build_invariant_form(algebra, couplings, cfg),
        vev=vev,
        vacuum_direction=np.array([0.0, 0.0, 1.0]),
        expected=PresetExpectations(
            dim_h=1,
            dim_goldstone=2,
            massless_gauge=1,
            ym_spectrum=((0.0, 1), (mass, 2)),
            higgs_spectrum=((0.0, 2), (8.0 * vev ** 2, 1)),
        ),
    )


PRESETS: Dict[str, Callable[..., ModelPreset]] = {
    "abelian_higgs": abelian_higgs,
    "electroweak": electroweak,
    "su2_adjoint": su2_adjoint,
}


def preset_names():
    return sorted(PRESETS)


def load_preset(
    name: str,
    couplings: Optional[Sequence[float]] = None,
    vev: float = 1.0,
    cfg: Optional[Config] = None,
) -> ModelPreset:
    """Build a named preset; couplings default to one per factor."""
    if not name:
        raise InputError("preset name is required")
    builder = PRESETS.get(name)
    if builder is None:
        raise NotFoundError(f"Preset {name} not found; available: {', '.join(preset_names())}")
    preset = builder(couplings, vev, cfg)
    logger.debug(f"Loaded preset {name} with couplings {preset.couplings} and vev {preset.vev}")
    return preset
