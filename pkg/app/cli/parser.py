"""
Argument parser for the ymh-vacuum command line.
"""

import argparse

from app import __version__
from app.service.models import CHECK_GROUPS

JSON = "json"
MARKDOWN = "markdown"


def _seed(value: str) -> int:
    seed = int(value)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return number


def _groups(value: str) -> list:
    groups = [g.strip() for g in value.split(",") if g.strip()]
    unknown = [g for g in groups if g not in CHECK_GROUPS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown group(s) {', '.join(unknown)}; choose from {', '.join(CHECK_GROUPS)}")
    return groups


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=[JSON, MARKDOWN], default=JSON, help="Report format (default json)")
    parser.add_argument("--seed", type=_seed, default=None, help="Root seed for randomized checks")
    parser.add_argument("--out", default=None, help="Write the report here instead of stdout")
    parser.add_argument("--trials", type=_positive, default=None, help="Trials per randomized check")
    parser.add_argument("--parallel", action="store_true", help="Run trial sweeps on a thread pool")


def build_parser() -> argparse.ArgumentParser:
    """Parser with the analyze, check and holonomy subcommands."""
    parser = argparse.ArgumentParser(
        prog="ymh-vacuum",
        description="Vacuum structure and mass spectra of Yang-Mills-Higgs models.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Analyze the vacuum of a model file")
    analyze.add_argument("path", help="Model file (TOML)")
    _common(analyze)

    check = subparsers.add_parser("check", help="Run the invariant suite over all presets")
    check.add_argument(
        "--only",
        type=_groups,
        action="extend",
        default=None,
        help=f"Comma-separated check groups: {', '.join(CHECK_GROUPS)}",
    )
    _common(check)

    holonomy = subparsers.add_parser("holonomy", help="Classify the connections of a model file")
    holonomy.add_argument("path", help="Model file (TOML) with a [holonomy] table")
    _common(holonomy)

    return parser
