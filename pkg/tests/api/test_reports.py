"""
Tests for report construction, JSON emission and exit codes.
"""

import json
import math
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import replace

import pytest
from pydantic import ValidationError

from app import __version__
from app.api import (
    EXIT_FAILURE,
    EXIT_INPUT,
    SCHEMA_VERSION,
    Report,
    build_check_report,
    build_holonomy_report,
    build_report,
    emit_json,
    exit_code_for,
    parse_model_file,
    round_floats,
)
from app.api.errors import describe_error
from app.errors import ConvergenceError, DegenerateMinimumError, IdentityViolationError, InputError, NotFoundError
from app.holonomy import CYCLE, build_spacetime

pytestmark = [pytest.mark.api]


@pytest.fixture(scope="module")
def electroweak_run(analysis_service, electroweak_model):
    return analysis_service.run(electroweak_model)


def test_build_report(electroweak_run, cfg):
    """Test the analysis report carries the spectra and every check."""
    report = build_report(electroweak_run, cfg, preset="electroweak")

    assert report.schema_version == SCHEMA_VERSION
    assert report.tool_version == __version__
    assert report.passed
    assert report.model.preset == "electroweak"
    assert report.model.couplings == [0.65, 0.35]
    assert [g.multiplicity for g in report.ym_spectrum.groups] == [1, 2, 1]
    assert [g.multiplicity for g in report.higgs_spectrum.groups] == [3, 1]
    assert report.higgs_spectrum.groups[1].value == pytest.approx(8.0, rel=1e-8)
    assert report.stabilizer.dim == 1
    assert report.spaces.dim_goldstone == 3
    assert len(report.spaces.goldstone_basis) == 3
    assert len(report.rank_identities) == 6
    assert report.holonomy is None
    assert len(report.checks) == len(electroweak_run.checks)


def test_report_json_round_trip(electroweak_run, cfg):
    """Test the emitted JSON validates back into an equal report."""
    report = build_report(electroweak_run, cfg, preset="electroweak")
    text = emit_json(report)

    assert text.endswith("}\n")
    assert Report.model_validate_json(text) == report
    assert json.loads(text)["config"]["seed"] == cfg.seed


def test_report_is_deterministic(electroweak_run, cfg):
    """Test identical runs emit byte-identical JSON."""
    assert emit_json(build_report(electroweak_run, cfg)) == emit_json(build_report(electroweak_run, cfg))


def test_report_config_omits_execution_settings(electroweak_run, cfg):
    """Test the parallel flag does not reach the echoed configuration."""
    serial = emit_json(build_report(electroweak_run, cfg))
    parallel = emit_json(build_report(electroweak_run, replace(cfg, parallel=True)))

    assert serial == parallel
    assert "parallel" not in json.loads(serial)["config"]
    assert "parallel" in cfg.to_dict()


def test_report_includes_holonomy(electroweak_run, holonomy_service, cfg):
    """Test holonomy checks join the report's check list."""
    cycle = build_spacetime(CYCLE, 3)
    group = holonomy_service.residual_group("so2")
    holonomy = holonomy_service.classify(cycle, group, holonomy_service.connections(cycle, group, random=2))
    report = build_report(electroweak_run, cfg, holonomy=holonomy)

    assert report.holonomy["certificates_verified"]
    assert "gauge certificates verify" in [c.name for c in report.checks]


def test_build_holonomy_report(holonomy_service, cfg):
    """Test the holonomy report lists one holonomy per connection."""
    cycle = build_spacetime(CYCLE, 4)
    group = holonomy_service.residual_group("so2")
    run = holonomy_service.classify(
        cycle, group, holonomy_service.connections(cycle, group, parameters=[[0.0] * 4, [0.5] * 4]), expect_classes=2
    )
    report = build_holonomy_report(run, cfg)

    assert report.connections == 2
    assert report.classification["count"] == 2
    assert report.passed
    assert len(report.holonomies[0]) == 2


def test_build_check_report(check_service, cfg):
    """Test the suite report keeps the --only selection."""
    outcomes, passed = check_service.run(["algebra"])
    report = build_check_report(outcomes, passed, cfg, only=["algebra"])

    assert report.only == ["algebra"]
    assert report.trials == cfg.trials
    assert report.passed
    assert {r.model for r in report.results} == {"abelian_higgs", "electroweak", "su2_adjoint"}


def test_round_floats():
    """Test floats are rounded to 12 significant digits and negative zero is normalized."""
    data = {"a": 0.1 + 0.2, "b": [1.0000000000001, -0.0], "c": (True, 3), "d": math.inf}

    assert round_floats(data) == {"a": 0.3, "b": [1.0, 0.0], "c": [True, 3], "d": math.inf}
    assert math.copysign(1.0, round_floats(-1e-30 * 0.0)) == 1.0


def _validation_error() -> ValidationError:
    with pytest.raises(ValidationError) as info:
        parse_model_file('[model]\npreset = "electroweak"\nextra = 1\n')
    return info.value


def _decode_error() -> tomllib.TOMLDecodeError:
    with pytest.raises(tomllib.TOMLDecodeError) as info:
        tomllib.loads("= 1")
    return info.value


@pytest.mark.parametrize(
    "make_error, code",
    [
        (lambda: InputError("bad input"), EXIT_INPUT),
        (lambda: NotFoundError("missing preset"), EXIT_INPUT),
        (_validation_error, EXIT_INPUT),
        (_decode_error, EXIT_INPUT),
        (lambda: FileNotFoundError("absent.toml"), EXIT_INPUT),
        (lambda: ConvergenceError("minimize", "stalled"), EXIT_FAILURE),
        (lambda: DegenerateMinimumError("flat"), EXIT_FAILURE),
        (lambda: IdentityViolationError("rank"), EXIT_FAILURE),
        (lambda: RuntimeError("boom"), EXIT_FAILURE),
    ],
)
def test_exit_code_for(make_error, code):
    """Test exceptions map to exit code 2 for bad input and 1 for analysis failures."""
    assert exit_code_for(make_error()) == code


def test_describe_error():
    """Test diagnostics name the failing stage and the schema location."""
    assert describe_error(ConvergenceError("minimize", "stalled")) == "no convergence in stage minimize: stalled"
    assert describe_error(_validation_error()).startswith("schema violation: model.extra:")
