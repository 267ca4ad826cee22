"""
Markdown rendering of reports.
"""

from typing import Iterable, List

from app.api.models import CheckResult, CheckSuiteReport, HolonomyReport, Report, Spectrum


def _status(passed: bool) -> str:
    return "pass" if passed else "FAIL"


def _number(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _check_table(checks: Iterable[CheckResult], with_model: bool = False) -> List[str]:
    header = "| model | group | check | value | tolerance | status |" if with_model else (
        "| group | check | value | tolerance | status |"
    )
    lines = [header, "|" + "---|" * (header.count("|") - 1)]
    for c in checks:
        cells = [c.group, c.name, _number(c.value), _number(c.tolerance), _status(c.passed)]
        if with_model:
            cells.insert(0, c.model or "")
        lines.append("| " + " | ".join(cells) + " |")
    return lines


def _spectrum(title: str, spectrum: Spectrum) -> List[str]:
    lines = [f"### {title}", "", "| m^2 | multiplicity |", "|---|---|"]
    lines.extend(f"| {_number(g.value)} | {g.multiplicity} |" for g in spectrum.groups)
    return lines + [""]


def render_report(report: Report) -> str:
    """Markdown view of a vacuum analysis report."""
    m = report.model
    lines = [
        f"# Vacuum analysis: {m.name}",
        "",
        f"- tool version: {report.tool_version}, schema {report.schema_version}, seed {report.seed}",
        f"- N = {m.n}, dim G = {m.dim}, couplings = {', '.join(_number(g) for g in m.couplings)}",
        f"- z0 = [{', '.join(_number(x) for x in report.minimum.z0)}], V(z0) = {_number(report.minimum.value)}",
        f"- dim H = {report.stabilizer.dim}, dim W_G = {report.spaces.dim_goldstone}, "
        f"dim W_phys = {report.spaces.dim_phys}",
        f"- overall: **{_status(report.passed)}**",
        "",
    ]
    lines += _spectrum("Higgs spectrum", report.higgs_spectrum)
    lines += _spectrum("Yang-Mills spectrum", report.ym_spectrum)
    lines += ["### Checks", ""] + _check_table(report.checks) + [""]
    if report.holonomy is not None:
        classification = report.holonomy["classification"]
        lines += ["### Holonomy", "", f"{classification['count']} class(es): {classification['classes']}", ""]
    return "\n".join(lines)


def render_holonomy(report: HolonomyReport) -> str:
    """Markdown view of a holonomy classification."""
    classification = report.classification
    lines = [
        f"# Holonomy classification ({report.spacetime['kind']}, {report.spacetime['vertices']} vertices)",
        "",
        f"- group: {report.group['name']} (dim {report.group['dim']})",
        f"- connections: {report.connections}",
        f"- classes: {classification['count']} {classification['classes']}",
        f"- certificates verified: {report.certificates_verified}",
        f"- overall: **{_status(report.passed)}**",
        "",
    ]
    lines += _check_table(report.checks) + [""]
    return "\n".join(lines)


def render_checks(report: CheckSuiteReport) -> str:
    """Markdown per-invariant table of the check suite."""
    passed = sum(1 for r in report.results if r.passed)
    lines = [
        "# Invariant suite",
        "",
        f"- seed {report.seed}, trials {report.trials}",
        f"- {passed}/{len(report.results)} checks passed: **{_status(report.passed)}**",
        "",
    ]
    lines += _check_table(report.results, with_model=True) + [""]
    return "\n".join(lines)
