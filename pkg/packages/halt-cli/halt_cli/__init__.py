"""halt-cli - command-line experiments and reports for the halt lab."""
from __future__ import annotations

from halt_cli.cli import cli, main
from halt_cli.config import ExperimentConfig
from halt_cli.emit import Report, write_report
from halt_cli.experiments import phi_reduction_report, phi_reduction_rows, square_embed_report

__all__ = [
    "ExperimentConfig",
    "Report",
    "cli",
    "main",
    "phi_reduction_report",
    "phi_reduction_rows",
    "square_embed_report",
    "write_report",
]
