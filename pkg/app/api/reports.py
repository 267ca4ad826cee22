"""
Report construction from service results.
"""

from typing import Iterable, List, Optional

import numpy as np

from app import __version__
from app.api.models import (
    CheckSuiteReport,
    HolonomyReport,
    Report,
    round_floats,
)
from app.config import Config
from app.service.models import AnalysisRun, CheckOutcome, HolonomyRun


def _columns(basis: np.ndarray) -> list:
    """Basis vectors as a list of columns."""
    return basis.T.tolist()


def _checks(outcomes: Iterable[CheckOutcome]) -> List[dict]:
    return [o.to_dict() for o in outcomes]


def build_report(
    run: AnalysisRun,
    cfg: Config,
    preset: Optional[str] = None,
    holonomy: Optional[HolonomyRun] = None,
) -> Report:
    """Vacuum analysis report; floats rounded to 12 significant digits."""
    model = run.model
    minimum = run.minimum
    analysis = run.analysis
    checks = list(run.checks) + (list(holonomy.checks) if holonomy is not None else [])

    data = {
        "tool_version": __version__,
        "seed": cfg.seed,
        "model": {
            "name": model.name,
            "preset": preset,
            "n": model.representation.n,
            "dim": model.algebra.dim,
            "couplings": list(model.couplings),
            "vev": model.vev if preset is not None else None,
            "potential": list(model.potential.coefficients) if model.potential.is_rotsym else None,
        },
        "config": cfg.to_dict(execution=False),
        "minimum": {
            "z0": minimum.z0.tolist(),
            "value": minimum.value,
            "grad_norm": minimum.grad_norm,
            "iterations": minimum.iterations,
            "transversal_spectrum": minimum.transversal_spectrum.tolist(),
        },
        "stabilizer": {"dim": analysis.dim_h, "basis": _columns(analysis.lie_h)},
        "spaces": {
            "dim_goldstone": analysis.dim_goldstone,
            "dim_phys": analysis.dim_phys,
            "goldstone_basis": _columns(analysis.w_goldstone),
            "phys_basis": _columns(analysis.w_phys),
            "grading_ok": analysis.n + analysis.dim_h - analysis.dim >= 0,
        },
        "higgs_spectrum": analysis.higgs_spectrum.to_dict(),
        "ym_spectrum": analysis.ym_spectrum.to_dict(),
        "rank_identities": run.sections.get("rank_identities", {}).get("checks", []),
        "gauge_invariance": run.sections.get("gauge_invariance", {}),
        "residual_symmetry": run.sections.get("residual_symmetry", {}),
        "physical_higgs_mass": run.sections.get("physical_higgs_mass"),
        "unitary_gauge": run.sections.get("unitary_gauge"),
        "fluctuation_checks": run.sections.get("fluctuation_checks"),
        "normal_gradient_checks": run.sections.get("normal_gradient_checks"),
        "holonomy": holonomy.to_dict() if holonomy is not None else None,
        "checks": _checks(checks),
        "passed": all(c.passed for c in checks),
    }
    return Report.model_validate(round_floats(data))


def build_holonomy_report(run: HolonomyRun, cfg: Config) -> HolonomyReport:
    """Classification report for the holonomy subcommand."""
    data = {
        "tool_version": __version__,
        "seed": cfg.seed,
        "spacetime": run.spacetime,
        "group": run.group,
        "connections": len(run.holonomies),
        "holonomies": run.holonomies,
        "classification": run.classification,
        "certificates_verified": run.certificates_verified,
        "checks": _checks(run.checks),
        "passed": run.passed,
    }
    return HolonomyReport.model_validate(round_floats(data))


def build_check_report(
    outcomes: List[CheckOutcome],
    passed: bool,
    cfg: Config,
    only: Optional[List[str]] = None,
) -> CheckSuiteReport:
    """Invariant suite table."""
    data = {
        "tool_version": __version__,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "only": only,
        "results": _checks(outcomes),
        "passed": passed,
    }
    return CheckSuiteReport.model_validate(round_floats(data))


def emit_json(report) -> str:
    """Deterministic JSON text with a trailing newline."""
    return report.model_dump_json(indent=2) + "\n"
