"""
Model file loading: TOML parsing, schema validation and model construction.
"""

import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from app.api.models import ModelFile
from app.config import Config, config_with_overrides, default_config
from app.errors import InputError
from app.liealg.algebra import algebra_preset, build_algebra, build_invariant_form, validate_algebra
from app.liealg.models import Factor
from app.potential.potential import rotsym_potential
from app.presets.models import ModelPreset
from app.presets.presets import load_preset
from app.rep.representation import build_representation, realify

logger = logging.getLogger(__name__)


def parse_model_file(text: str) -> ModelFile:
    """Parse TOML text and validate it against the schema."""
    data = tomllib.loads(text)
    return ModelFile.model_validate(data)


def read_model_file(path: Union[str, Path]) -> ModelFile:
    """Read and validate a model file; OSError, TOMLDecodeError and ValidationError propagate."""
    text = Path(path).read_text(encoding="utf-8")
    model_file = parse_model_file(text)
    logger.debug(f"Read model file {path}")
    return model_file


def resolve_config(model_file: ModelFile, cfg: Optional[Config] = None, **flags) -> Config:
    """Defaults, then the model file's [analysis] table, then CLI flags."""
    analysis = model_file.analysis
    overrides = dict(analysis.tolerances)
    overrides["seed"] = analysis.seed
    overrides["trials"] = analysis.trials
    try:
        cfg = config_with_overrides(cfg or default_config(), overrides)
        return config_with_overrides(cfg, flags)
    except ValueError as e:
        raise InputError(f"analysis: {e}") from e


def build_model(model_file: ModelFile, cfg: Optional[Config] = None) -> Tuple[ModelPreset, np.ndarray]:
    """Construct the model and the minimization start point."""
    cfg = cfg or default_config()
    section = model_file.model

    if section.preset is not None:
        model = load_preset(section.preset, model_file.couplings, section.vev, cfg)
    else:
        model = _build_inline(model_file, cfg)

    if model_file.analysis.init is not None:
        init = np.asarray(model_file.analysis.init, dtype=float)
        if init.shape != (model.representation.n,):
            raise InputError(f"analysis.init must have length {model.representation.n}")
    else:
        init = model.initial_point
    return model, init


def _build_inline(model_file: ModelFile, cfg: Config) -> ModelPreset:
    spec = model_file.algebra
    if spec.preset is not None:
        algebra = algebra_preset(spec.preset)
    else:
        factors = None
        if spec.factors is not None:
            factors = [Factor(tuple(f.indices), f.kind) for f in spec.factors]
        algebra = build_algebra(spec.structure_constants, factors, spec.labels)
    validation = validate_algebra(algebra, cfg)
    if not validation.passed:
        raise InputError("algebra: " + "; ".join(validation.problems))

    rep_spec = model_file.representation
    if rep_spec.adjoint:
        representation = build_representation(algebra, np.transpose(algebra.structure_constants, (0, 2, 1)), cfg)
    elif rep_spec.generators is not None:
        representation = build_representation(algebra, rep_spec.generators, cfg)
    else:
        matrices = []
        for position, m in enumerate(rep_spec.complex_generators):
            re, im = np.asarray(m.re, dtype=float), np.asarray(m.im, dtype=float)
            if re.shape != im.shape:
                raise InputError(f"representation.complex_generators[{position}]: re and im shapes differ")
            matrices.append(re + 1j * im)
        representation = realify(algebra, matrices, cfg)

    potential = rotsym_potential(model_file.potential.coefficients, representation.n)
    couplings = tuple(model_file.couplings)
    direction = np.zeros(representation.n)
    direction[0] = 1.0
    return ModelPreset(
        name=model_file.model.name or "custom",
        algebra=algebra,
        representation=representation,
        potential=potential,
        couplings=couplings,
        beta=build_invariant_form(algebra, couplings, cfg),
        vev=1.0,
        vacuum_direction=direction,
    )
