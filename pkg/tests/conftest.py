"""
Pytest configuration and fixtures for ymh-vacuum tests.
"""

from pathlib import Path

import numpy as np
import pytest

from app.breaking import analyze_vacuum
from app.config import Config, default_config
from app.potential import minimize
from app.presets import abelian_higgs, electroweak, su2_adjoint
from app.service import AnalysisService, CheckService, HolonomyService


REPO_ROOT = Path(__file__).resolve().parent.parent
MODELS_DIR = REPO_ROOT / "models"


@pytest.fixture(scope="session")
def cfg() -> Config:
    """Default configuration with a small trial count."""
    return Config(trials=10)


@pytest.fixture(scope="session")
def models_dir() -> Path:
    """Directory of the shipped model files."""
    return MODELS_DIR


@pytest.fixture(scope="session")
def abelian_model(cfg):
    """Abelian Higgs preset with g = 1, v = 1."""
    return abelian_higgs(cfg=cfg)


@pytest.fixture(scope="session")
def electroweak_model(cfg):
    """Electroweak preset with unequal couplings."""
    return electroweak(couplings=(0.65, 0.35), cfg=cfg)


@pytest.fixture(scope="session")
def adjoint_model(cfg):
    """su(2) adjoint Higgs preset."""
    return su2_adjoint(cfg=cfg)


def _analyzed(model, cfg):
    minimum = minimize(model.potential, model.representation, model.initial_point, cfg)
    analysis = analyze_vacuum(model.representation, model.potential, minimum.z0, model.beta, cfg)
    return minimum, analysis


@pytest.fixture(scope="session")
def abelian_vacuum(abelian_model, cfg):
    """(Minimum, VacuumAnalysis) of the abelian Higgs preset."""
    return _analyzed(abelian_model, cfg)


@pytest.fixture(scope="session")
def electroweak_vacuum(electroweak_model, cfg):
    """(Minimum, VacuumAnalysis) of the electroweak preset."""
    return _analyzed(electroweak_model, cfg)


@pytest.fixture(scope="session")
def adjoint_vacuum(adjoint_model, cfg):
    """(Minimum, VacuumAnalysis) of the su(2) adjoint preset."""
    return _analyzed(adjoint_model, cfg)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for test data."""
    return np.random.default_rng(12345)


@pytest.fixture
def default_cfg() -> Config:
    return default_config()


@pytest.fixture(scope="session")
def analysis_service(cfg):
    """Create AnalysisService instance."""
    return AnalysisService(cfg)


@pytest.fixture(scope="session")
def check_service(cfg):
    """Create CheckService instance."""
    return CheckService(cfg)


@pytest.fixture(scope="session")
def holonomy_service(cfg):
    """Create HolonomyService instance."""
    return HolonomyService(cfg)
