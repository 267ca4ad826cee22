"""
Command-line interface: analyze, check and holonomy subcommands.
"""

import logging
import sys
from typing import List, Optional

from app.api.errors import exit_code_for
from app.cli.handlers import HANDLERS
from app.cli.parser import build_parser

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def configure_logging(verbose: int = 0) -> None:
    """Log to stderr; -v for progress, -vv for debug output."""
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.verbose)
    try:
        return HANDLERS[args.command](args)
    except Exception as e:
        return exit_code_for(e)


__all__ = ["build_parser", "configure_logging", "main"]
