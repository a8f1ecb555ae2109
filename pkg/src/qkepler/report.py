"""Structured results for the command line tool.

A Report is a command name, its parameters, and a list of named check
rows.  Emission is deterministic: identical inputs and seed produce
byte-identical output in every format.  Floats are printed with 17
significant digits so the text survives a round trip through repr;
exact rationals are printed as fractions and never coerced to float.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

__all__ = ["CheckResult", "Report", "emit", "report_from_json"]

SCHEMA = "qkepler-report-1"


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        # parse back to float to keep json numeric, but normalize the text
        return float(format(value, ".17g"))
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class CheckResult:
    """One named comparison; lhs and rhs may be numbers or exact rationals."""

    name: str
    lhs: Any
    rhs: Any
    residual: Optional[float]
    tolerance: Optional[float]
    passed: bool


@dataclass(frozen=True)
class Report:
    command: str
    parameters: dict
    results: Sequence[CheckResult]
    seed: Optional[int] = None
    timestamp: Optional[str] = None
    schema: str = field(default=SCHEMA)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _emit_text(report: Report) -> str:
    lines = [f"command: {report.command}"]
    for key in sorted(report.parameters):
        lines.append(f"  {key}: {_fmt(report.parameters[key])}")
    if report.seed is not None:
        lines.append(f"  seed: {report.seed}")
    if report.timestamp is not None:
        lines.append(f"  timestamp: {report.timestamp}")
    width = max((len(r.name) for r in report.results), default=0)
    for r in report.results:
        status = "pass" if r.passed else "FAIL"
        parts = [f"{r.name:<{width}}  {status}"]
        if r.lhs is not None or r.rhs is not None:
            parts.append(f"lhs={_fmt(r.lhs)} rhs={_fmt(r.rhs)}")
        if r.residual is not None:
            parts.append(f"residual={_fmt(r.residual)}")
        if r.tolerance is not None:
            parts.append(f"tol={_fmt(r.tolerance)}")
        lines.append("  ".join(parts))
    lines.append("result: " + ("pass" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def _emit_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "lhs", "rhs", "residual", "tolerance", "pass"])
    for r in report.results:
        writer.writerow([r.name, _fmt(r.lhs), _fmt(r.rhs),
                         _fmt(r.residual), _fmt(r.tolerance),
                         "true" if r.passed else "false"])
    return buf.getvalue()


def _emit_json(report: Report) -> str:
    payload = {
        "schema": report.schema,
        "command": report.command,
        "parameters": _jsonable(report.parameters),
        "seed": report.seed,
        "timestamp": report.timestamp,
        "passed": bool(report.passed),
        "results": [
            {
                "name": r.name,
                "lhs": _jsonable(r.lhs),
                "rhs": _jsonable(r.rhs),
                "residual": _jsonable(r.residual),
                "tolerance": _jsonable(r.tolerance),
                # numpy bools slip in from comparisons; json rejects them
                "passed": bool(r.passed),
            }
            for r in report.results
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def emit(report: Report, fmt: str = "text") -> str:
    """Render a report as 'text', 'csv' or 'json'."""
    if fmt == "text":
        return _emit_text(report)
    if fmt == "csv":
        return _emit_csv(report)
    if fmt == "json":
        return _emit_json(report)
    raise ValueError(f"unknown format {fmt!r}")


def report_from_json(text: str) -> Report:
    """Rebuild a Report from its json emission (floats and strings only)."""
    payload = json.loads(text)
    results = tuple(
        CheckResult(name=row["name"], lhs=row["lhs"], rhs=row["rhs"],
                    residual=row["residual"], tolerance=row["tolerance"],
                    passed=row["passed"])
        for row in payload["results"])
    return Report(command=payload["command"],
                  parameters=payload["parameters"],
                  results=results,
                  seed=payload.get("seed"),
                  timestamp=payload.get("timestamp"),
                  schema=payload.get("schema", SCHEMA))
