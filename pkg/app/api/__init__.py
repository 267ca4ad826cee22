"""
Command-line API module: model-file schema, loading, reports and exit codes.
"""

from app.api.errors import EXIT_FAILURE, EXIT_INPUT, EXIT_OK, describe_error, exit_code_for
from app.api.loader import build_model, parse_model_file, read_model_file, resolve_config
from app.api.models import SCHEMA_VERSION, CheckSuiteReport, HolonomyReport, ModelFile, Report, round_floats
from app.api.reports import build_check_report, build_holonomy_report, build_report, emit_json

__all__ = [
    "EXIT_FAILURE",
    "EXIT_INPUT",
    "EXIT_OK",
    "SCHEMA_VERSION",
    "CheckSuiteReport",
    "HolonomyReport",
    "ModelFile",
    "Report",
    "build_check_report",
    "build_holonomy_report",
    "build_model",
    "build_report",
    "describe_error",
    "emit_json",
    "exit_code_for",
    "parse_model_file",
    "read_model_file",
    "resolve_config",
    "round_floats",
]
