"""
Analysis configuration module.
"""

from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional


@dataclass(frozen=True)
class Config:
    """Numerical tolerances and sweep settings."""
    # Structure constants, antisymmetry, ad-invariance, equivariance
    tol_alg: float = 1e-10
    # Orthogonality of group elements and transports
    tol_orth: float = 1e-9
    # Relative SVD threshold for stabilizer and faithfulness ranks
    tol_rank: float = 1e-8
    # Gradient norm at a certified minimum
    tol_min: float = 1e-9
    # G-invariance of the potential
    tol_inv: float = 1e-9
    # Eigenvalue sign / annihilation checks
    tol_eig: float = 1e-9
    # Eigenvalue grouping, applied as tol_group_rel * (1 + lambda_max)
    tol_group_rel: float = 1e-7
    # Spectrum deviation under gauge transformations
    tol_spec: float = 1e-8
    # Unitary-gauge critical-set residual
    tol_crit: float = 1e-9
    # Fluctuation and normal-gradient finite-difference checks
    tol_fluct: float = 1e-6
    # Vanishing Higgs state
    tol_zero: float = 1e-12
    # Conjugator search for nonabelian holonomies
    tol_conj: float = 1e-8
    # Base finite-difference step, scaled by (1 + |z|)
    fd_step: float = 1e-4
    max_iter: int = 100000
    unitary_max_iter: int = 20000
    unitary_restarts: int = 5
    trials: int = 100
    seed: int = 0
    parallel: bool = False

    def tol_group(self, lambda_max: float) -> float:
        """Return the absolute grouping tolerance for a spectrum."""
        return self.tol_group_rel * (1.0 + abs(lambda_max))

    def to_dict(self, execution: bool = True) -> dict:
        """Convert to dictionary; execution=False drops settings that cannot change results."""
        return {
            f.name: getattr(self, f.name)
            for f in fields(self)
            if execution or f.name not in _EXECUTION_FIELDS
        }


_EXECUTION_FIELDS = {"parallel"}


_INTEGER_FIELDS = {"max_iter", "unitary_max_iter", "unitary_restarts", "trials", "seed"}


def default_config() -> Config:
    """Return default analysis configuration."""
    return Config()


def config_with_overrides(cfg: Optional[Config], overrides: Optional[Dict[str, Any]]) -> Config:
    """Return a copy of cfg with the given fields replaced."""
    cfg = cfg or default_config()
    if not overrides:
        return cfg

    known = {f.name for f in fields(Config)}
    changes: Dict[str, Any] = {}
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in known:
            raise ValueError(f"unknown configuration field: {key}")
        if key == "parallel":
            changes[key] = bool(value)
        elif key in _INTEGER_FIELDS:
            if int(value) < 0:
                raise ValueError(f"{key} must be non-negative")
            changes[key] = int(value)
        else:
            if float(value) <= 0:
                raise ValueError(f"{key} must be positive")
            changes[key] = float(value)

    return replace(cfg, **changes)
