"""Experiment configuration dataclass."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from halt.sweep import DEFAULT_SWEEP, SweepConfig
from halt.types import require_positive
from halt_universal.universal import UniversalSpec

ReportFormat = Literal["csv", "json"]
FORMATS: tuple[ReportFormat, ...] = ("csv", "json")


@dataclass(frozen=True)
class ExperimentConfig:
    """Immutable settings shared by every experiment.

    Attributes:
        universal: Name accepted by ``UniversalSpec.from_name``.
        n: Upper end of the input range ``[1, n]``.
        budget: Step budget per evaluation.
        output_path: Report file; None writes to standard output.
        fmt: ``csv`` or ``json``.
        seed: Shuffles sampling order when set; None scans in ascending order.
        sweep: Chunking and worker count for range sweeps.
    """

    universal: str = "base_v"
    n: int = 1000
    budget: int = 1000
    output_path: Path | None = None
    fmt: ReportFormat = "csv"
    seed: int | None = None
    sweep: SweepConfig = DEFAULT_SWEEP

    def __post_init__(self) -> None:
        require_positive("n", self.n)
        require_positive("budget", self.budget)
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be csv or json, got {self.fmt!r}")

    def spec(self) -> UniversalSpec:
        return UniversalSpec.from_name(self.universal)
