"""
Error handling utilities for the command-line API.
"""

import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from pydantic import ValidationError

from app.errors import ConvergenceError, DegenerateMinimumError, IdentityViolationError, InputError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


def format_validation_error(err: ValidationError) -> str:
    """One line per schema problem, with the dotted field path."""
    lines = []
    for problem in err.errors():
        location = ".".join(str(part) for part in problem.get("loc", ())) or "<root>"
        lines.append(f"{location}: {problem.get('msg', 'invalid value')}")
    return "; ".join(lines)


def describe_error(err: Exception) -> str:
    """Human-readable diagnostic for an exception."""
    if isinstance(err, ValidationError):
        return f"schema violation: {format_validation_error(err)}"
    if isinstance(err, tomllib.TOMLDecodeError):
        return f"model file is not valid TOML: {err}"
    if isinstance(err, ConvergenceError):
        return f"no convergence in stage {err}"
    return str(err)


def exit_code_for(err: Exception) -> int:
    """Convert a raised exception to the CLI exit code."""
    if isinstance(err, (InputError, ValidationError, tomllib.TOMLDecodeError, OSError)):
        logger.error(describe_error(err))
        return EXIT_INPUT
    elif isinstance(err, (ConvergenceError, DegenerateMinimumError, IdentityViolationError)):
        logger.error(describe_error(err))
        return EXIT_FAILURE
    else:
        logger.exception(f"Unexpected error: {err}")
        return EXIT_FAILURE
