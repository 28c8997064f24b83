"""Budgeted check of programmable universality: ``y <= k*x`` with ``U(y) = F(x)``."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from halt.machine import gamma
from halt.types import require_positive

from halt_universal.universal import Evaluable

logger = logging.getLogger(__name__)


class ProgrammableVerdict(Enum):
    WITNESS = "witness"
    NO_WITNESS = "no-witness-within-budget"
    F_DIVERGED = "f-diverged-within-budget"


@dataclass(frozen=True)
class ProgrammableEntry:
    x: int
    verdict: ProgrammableVerdict
    target: int | None = None
    witness: int | None = None


@dataclass(frozen=True)
class ProgrammableReport:
    k: int
    budget: int
    entries: tuple[ProgrammableEntry, ...]

    def count(self, verdict: ProgrammableVerdict) -> int:
        return sum(1 for entry in self.entries if entry.verdict is verdict)

    @property
    def all_witnessed(self) -> bool:
        return self.count(ProgrammableVerdict.WITNESS) == len(self.entries)


def check_programmable(
    u: Evaluable, f_index: int, k: int, xs: Iterable[int], budget: int,
) -> ProgrammableReport:
    """Search ``[1, k*x]`` exhaustively for each ``x`` where F halts.

    A missing witness is inconclusive (a longer budget might find one),
    never a refutation.
    """
    require_positive("k", k)
    require_positive("budget", budget)
    inputs = list(xs)
    if not inputs:
        raise ValueError("xs must be nonempty")

    entries: list[ProgrammableEntry] = []
    for x in inputs:
        target = gamma(f_index, x, budget)
        if target.value is None:
            entries.append(ProgrammableEntry(x, ProgrammableVerdict.F_DIVERGED))
            continue
        witness = next(
            (y for y in range(1, k * x + 1) if u.evaluate(y, budget).value == target.value),
            None,
        )
        if witness is None:
            logger.info("no witness for x=%d below %d within %d steps", x, k * x, budget)
            entries.append(ProgrammableEntry(x, ProgrammableVerdict.NO_WITNESS, target.value))
        else:
            entries.append(ProgrammableEntry(x, ProgrammableVerdict.WITNESS, target.value, witness))
    return ProgrammableReport(k, budget, tuple(entries))
