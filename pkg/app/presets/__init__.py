"""
Model presets module initialization.
"""

from app.presets.models import ModelPreset, PresetExpectations
from app.presets.presets import PRESETS, abelian_higgs, electroweak, load_preset, preset_names, su2_adjoint

__all__ = [
    "PRESETS",
    "ModelPreset",
    "PresetExpectations",
    "abelian_higgs",
    "electroweak",
    "load_preset",
    "preset_names",
    "su2_adjoint",
]
