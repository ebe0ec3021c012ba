"""Markdown summary of a run directory. Reads artifacts only; computes nothing."""

import math
from pathlib import Path
from typing import Any

from ..utils.hash import hash_file
from .artifacts import read_csv, read_json

ARTIFACTS = (
    "system.json",
    "intervals.csv",
    "anchors.csv",
    "rects.csv",
    "counts.csv",
    "report.json",
    "slopes.json",
    "areas.csv",
    "chain.json",
)

LEMMAS = (
    "simple1",
    "trivial_cap",
    "simple2",
    "simple3",
    "int",
    "int_strip",
    "int_literal",
    "mtheta_y_sma",
    "mtheta_x_lar",
    "mtheta",
    "lip1",
    "lip2",
    "sangle",
    "langle",
    "langle2",
    "cl1",
    "ladder",
    "oracle",
)

SCALING_CHECKS = ("area_sum", "area_bracket", "chain", "chain_floor")


def _num(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return "nan" if math.isnan(value) else f"{value:.6g}"
    return str(value)


def _pass(value: Any) -> str:
    return {True: "pass", False: "FAIL"}.get(value, "-")


def _lemma_table(reports: list[dict[str, Any]], expected: tuple[str, ...] = LEMMAS) -> list[str]:
    lines = [
        "| lemma | kind | instances | skipped | measured max | bound | constant | stability | result |",
        "|---|---|---|---|---|---|---|---|---|",
    ]
    by_name = {r["lemma"]: r for r in reports}
    names = list(expected) + sorted(set(by_name) - set(expected))
    for name in names:
        r = by_name.get(name)
        if r is None:
            lines.append(f"| {name} | - | - | - | - | - | - | - | absent |")
            continue
        kind = "exact" if r.get("exact_constant") else "fitted"
        lines.append(
            f"| {name} | {kind} | {r.get('instances', 0)} | {r.get('skipped', 0)} | "
            f"{_num(r.get('measured_max'))} | {_num(r.get('bound'))} | {_num(r.get('constant'))} | "
            f"{_num(r.get('stability'))} | {_pass(r.get('pass'))} |"
        )
    return lines


def _slopes_table(slopes: dict[str, Any]) -> list[str]:
    lines = [
        "| quantity | slope | predicted | residual | points |",
        "|---|---|---|---|---|",
    ]
    for name, entry in sorted(slopes.get("fits", {}).items()):
        fit = entry.get("fit") or {}
        lines.append(
            f"| {name} | {_num(fit.get('slope'))} | {_num(entry.get('predicted'))} | "
            f"{_num(fit.get('residual'))} | {_num(fit.get('points'))} |"
        )
    return lines


def _chain_table(chain: dict[str, Any]) -> list[str]:
    lines = [
        "| n | angles | LHS inner | MID outer | RHS outer | holds | dimension | dimension (log) |",
        "|---|---|---|---|---|---|---|---|",
    ]
    for level in chain.get("levels", []):
        lines.append(
            f"| {level['n']} | {level['angles']} | {_num(level['lhs']['inner'])} | "
            f"{_num(level['mid']['outer'])} | {_num(level['rhs']['outer'])} | "
            f"{'yes' if level['holds'] else 'NO'} | {_num(level['dimension'])} | "
            f"{_num(level['dimension_log'])} |"
        )
    return lines


def render_summary(directory: Path) -> str:
    """Markdown tables for every artifact present, plus SHA-256 digests."""
    directory = Path(directory)
    present = [name for name in ARTIFACTS if (directory / name).is_file()]
    if not present:
        return f"# Run summary: {directory}\n\nno artifacts\n"

    lines = [f"# Run summary: {directory}", ""]

    report_path = directory / "report.json"
    if report_path.is_file():
        report = read_json(report_path)
        lines += [f"## Verification: {'pass' if report.get('passed') else 'FAIL'}", ""]
        lines += _lemma_table(report.get("reports", [])) + [""]

    counts_path = directory / "counts.csv"
    if counts_path.is_file():
        _, rows = read_csv(counts_path)
        largest = max((int(r["L"]) for r in rows), default=0)
        lines += ["## Counts", "", f"{len(rows)} rows, max L = {largest}", ""]

    slopes_path = directory / "slopes.json"
    if slopes_path.is_file():
        slopes = read_json(slopes_path)
        lines += ["## Exponent fits", ""] + _slopes_table(slopes) + [""]
        if slopes.get("checks"):
            verdict = "pass" if slopes.get("passed") else "FAIL"
            lines += [f"## Scaling checks: {verdict}", ""]
            lines += _lemma_table(slopes["checks"], SCALING_CHECKS) + [""]

    chain_path = directory / "chain.json"
    if chain_path.is_file():
        lines += ["## Measure chain", ""] + _chain_table(read_json(chain_path)) + [""]

    lines += ["## Artifacts", "", "| file | sha256 |", "|---|---|"]
    for name in ARTIFACTS:
        path = directory / name
        lines.append(f"| {name} | {hash_file(path) if path.is_file() else 'absent'} |")
    lines.append("")
    return "\n".join(lines)
