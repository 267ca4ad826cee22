"""
Subcommand handlers for the ymh-vacuum command line.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from app.api import (
    build_check_report,
    build_holonomy_report,
    build_model,
    build_report,
    emit_json,
    read_model_file,
    resolve_config,
)
from app.api.errors import EXIT_FAILURE, EXIT_OK
from app.api.models import HolonomySection, ModelFile
from app.cli.parser import MARKDOWN
from app.cli.render import render_checks, render_holonomy, render_report
from app.config import Config, config_with_overrides, default_config
from app.errors import InputError
from app.holonomy import build_spacetime
from app.service import AnalysisService, CheckService, HolonomyService
from app.service.models import HolonomyRun

logger = logging.getLogger(__name__)


def _flags(args: argparse.Namespace) -> dict:
    """Configuration overrides given on the command line."""
    return {
        "seed": args.seed,
        "trials": args.trials,
        "parallel": True if args.parallel else None,
    }


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info(f"Report written to {out}")


def _emit(report, renderer, args: argparse.Namespace) -> None:
    text = renderer(report) if args.format == MARKDOWN else emit_json(report)
    if args.format == MARKDOWN and not text.endswith("\n"):
        text += "\n"
    _write(text, args.out)


def _run_holonomy(
    section: HolonomySection,
    cfg: Config,
    model=None,
    analysis=None,
) -> HolonomyRun:
    service = HolonomyService(cfg)
    spacetime = build_spacetime(section.kind, section.length)
    group = service.residual_group(section.group, model, analysis)
    connections = service.connections(spacetime, group, section.connections, section.matrices, section.random)
    return service.classify(spacetime, group, connections, section.expect_classes)


def handle_analyze(args: argparse.Namespace) -> int:
    """Analyze the vacuum of one model file."""
    model_file: ModelFile = read_model_file(args.path)
    if not model_file.has_model:
        raise InputError("model file has no model to analyze; use the holonomy subcommand")
    cfg = resolve_config(model_file, default_config(), **_flags(args))
    model, init = build_model(model_file, cfg)

    run = AnalysisService(cfg).run(model, init=init, unitary_states=model_file.analysis.unitary_states)
    holonomy_run = None
    if model_file.holonomy is not None:
        holonomy_run = _run_holonomy(model_file.holonomy, cfg, model, run.analysis)

    report = build_report(run, cfg, preset=model_file.model.preset, holonomy=holonomy_run)
    _emit(report, render_report, args)
    return EXIT_OK if report.passed else EXIT_FAILURE


def handle_check(args: argparse.Namespace) -> int:
    """Run the invariant suite over every preset."""
    try:
        cfg = config_with_overrides(default_config(), _flags(args))
    except ValueError as e:
        raise InputError(str(e)) from e
    outcomes, passed = CheckService(cfg).run(args.only)
    report = build_check_report(outcomes, passed, cfg, only=args.only)
    _emit(report, render_checks, args)
    return EXIT_OK if passed else EXIT_FAILURE


def handle_holonomy(args: argparse.Namespace) -> int:
    """Classify the connections listed in a model file."""
    model_file: ModelFile = read_model_file(args.path)
    if model_file.holonomy is None:
        raise InputError("model file has no [holonomy] table")
    cfg = resolve_config(model_file, default_config(), **_flags(args))

    model = analysis = None
    if model_file.holonomy.group == "stabilizer":
        if not model_file.has_model:
            raise InputError("holonomy.group = 'stabilizer' requires a model")
        model, init = build_model(model_file, cfg)
        analysis = AnalysisService(cfg).run(model, init=init, groups=["goldstone"]).analysis

    run = _run_holonomy(model_file.holonomy, cfg, model, analysis)
    report = build_holonomy_report(run, cfg)
    _emit(report, render_holonomy, args)
    return EXIT_OK if report.passed else EXIT_FAILURE


HANDLERS = {
    "analyze": handle_analyze,
    "check": handle_check,
    "holonomy": handle_holonomy,
}
