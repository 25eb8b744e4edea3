"""Report objects and their human / json / csv renderings.

Rationals are written as exact ``"p/q"`` strings everywhere; nothing is rounded.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Optional

SCHEMA_VERSION = "1"
FORMATS = ("human", "json", "csv")


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    summary: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    headline: Optional[str] = None
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return jsonable(
            {
                "schema_version": self.schema_version,
                "command": self.command,
                "parameters": self.parameters,
                "headline": self.headline,
                "summary": self.summary,
                "rows": self.rows,
                "provenance": self.provenance,
            }
        )


def jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def schema_path() -> Path:
    return Path(str(resources.files("surfbound") / "schema" / "report.schema.json"))


def load_schema() -> dict:
    return json.loads(schema_path().read_text(encoding="utf-8"))


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return ",".join(_cell(v) for v in value)
    return str(value)


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for row in rows:
        for k in row:
            if k not in cols:
                cols.append(k)
    return cols


def render_human(report: Report) -> str:
    data = report.to_dict()
    out = []
    if data["headline"]:
        out.append(data["headline"])
    out.append(f"# {report.command}")
    if data["parameters"]:
        out.append("parameters: " + " ".join(f"{k}={_cell(v)}" for k, v in data["parameters"].items()))
    width = max((len(k) for k in data["summary"]), default=0)
    for k, v in data["summary"].items():
        out.append(f"{k.ljust(width)} : {_cell(v)}")
    rows = data["rows"]
    if rows:
        cols = _columns(rows)
        cells = [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        out.append("")
        out.append("| " + " | ".join(c.ljust(w) for c, w in zip(cols, widths)) + " |")
        out.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        for r in cells:
            out.append("| " + " | ".join(v.rjust(w) for v, w in zip(r, widths)) + " |")
    elif "rows" in data and report.command in ("configs", "scan", "gin oracle"):
        out.append("(no rows)")
    if data["provenance"]:
        out.append("")
        out.extend(f"* {p}" for p in data["provenance"])
    return "\n".join(out) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


LISTING_COMMANDS = ("configs", "scan", "gin oracle", "table")


def render_csv(report: Report) -> str:
    """Rows one per line; a command without rows writes its summary as a single row."""
    data = report.to_dict()
    rows = data["rows"]
    if not rows and report.command not in LISTING_COMMANDS and data["summary"]:
        rows = [data["summary"]]
    if not rows:
        return ""
    buf = io.StringIO()
    cols = _columns(rows)
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _cell(row.get(c)) if row.get(c) is not None else "" for c in cols})
    return buf.getvalue()


def render(report: Report, fmt: str = "human") -> str:
    if fmt == "human":
        return render_human(report)
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    raise ValueError(f"unknown format {fmt!r}")
