"""CSV and JSON report writers.

Output is a pure function of the report: fixed column order, ``\\n`` line
endings and sorted JSON keys, so identical runs give identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import click

from halt_cli.config import ReportFormat


@dataclass(frozen=True)
class Report:
    """Tabular rows plus a summary mapping.

    CSV renders the rows followed by one ``# key=value`` comment line per
    summary entry (sorted keys, JSON values). JSON renders
    ``{"rows": [...], **summary}`` with each row as an object keyed by column.
    """

    columns: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...] = ()
    summary: dict[str, Any] = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        for key in sorted(self.summary):
            value = json.dumps(self.summary[key], sort_keys=True, separators=(",", ":"))
            buf.write(f"# {key}={value}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        data = dict(self.summary)
        if self.rows:
            data["rows"] = [dict(zip(self.columns, row)) for row in self.rows]
        return json.dumps(data, sort_keys=True, indent=2) + "\n"

    def render(self, fmt: ReportFormat) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def write_report(report: Report, fmt: ReportFormat, out: Path | None) -> None:
    """Write to ``out``, or to standard output when ``out`` is None."""
    text = report.render(fmt)
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")
