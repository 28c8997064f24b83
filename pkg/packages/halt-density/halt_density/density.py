"""Finite natural densities ``p_N(A) = #([1, N] & A) / N``.

Decidable predicates get exact counts. Halting sets only get lower
bounds: a point counts when it halts within the step budget, and nothing
is ever claimed about the points that did not.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from halt.encodings import phi_fiber, phi_preimage_count
from halt.sweep import DEFAULT_SWEEP, SweepConfig, count_where
from halt.types import Predicate, require_positive
from halt_universal.universal import Evaluable

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("N", "count", "density_num", "density_den", "mode", "budget", "approx")


class DensityMode(Enum):
    EXACT = "exact"
    HALTING_LOWER_BOUND = "halting_lower_bound"


@dataclass(frozen=True)
class DensityReport:
    """Count of members of a set in ``[1, n]``.

    Attributes:
        n: Upper end of the range.
        count: Members found.
        mode: EXACT for a decidable set, HALTING_LOWER_BOUND for a halting set.
        budget: Step budget; present exactly when mode is HALTING_LOWER_BOUND.
    """

    n: int
    count: int
    mode: DensityMode = DensityMode.EXACT
    budget: int | None = None

    def __post_init__(self) -> None:
        require_positive("n", self.n)
        if not 0 <= self.count <= self.n:
            raise ValueError(f"count {self.count} outside [0, {self.n}]")
        if (self.mode is DensityMode.HALTING_LOWER_BOUND) != (self.budget is not None):
            raise ValueError("a budget is required for, and only for, halting lower bounds")

    @property
    def density(self) -> Fraction:
        return Fraction(self.count, self.n)

    @property
    def approx(self) -> float:
        """Float rendering of :attr:`density` for human readers only."""
        return self.count / self.n

    def csv_row(self) -> tuple[object, ...]:
        d = self.density
        return (
            self.n, self.count, d.numerator, d.denominator, self.mode.value,
            "" if self.budget is None else self.budget, f"{self.approx:.6f}",
        )

    def to_dict(self) -> dict[str, object]:
        d = self.density
        return {
            "N": self.n,
            "count": self.count,
            "density": {"num": d.numerator, "den": d.denominator},
            "mode": self.mode.value,
            "budget": self.budget,
        }


def density_exact(pred: Predicate, n: int, config: SweepConfig = DEFAULT_SWEEP) -> DensityReport:
    """Exact ``p_n`` of a predicate that is total on ``[1, n]``."""
    require_positive("n", n)
    return DensityReport(n, count_where(pred, n, config))


def halting_density_lower(
    u: Evaluable, n: int, budget: int, config: SweepConfig = DEFAULT_SWEEP,
) -> DensityReport:
    """Lower bound on ``p_n(Halt(u))``: inputs that halt within ``budget`` steps."""
    require_positive("n", n)
    require_positive("budget", budget)

    count = count_where(lambda x: u.evaluate(x, budget).is_halted, n, config)
    logger.debug("halting lower bound: %d of %d within %d steps", count, n, budget)
    return DensityReport(n, count, DensityMode.HALTING_LOWER_BOUND, budget)


def density_profile(pred: Predicate, checkpoints: Iterable[int]) -> list[DensityReport]:
    """Exact ``p_N`` at every checkpoint, from one pass up to the largest."""
    marks = sorted(set(checkpoints))
    if not marks:
        raise ValueError("checkpoints must be nonempty")
    require_positive("checkpoint", marks[0])
    reports: list[DensityReport] = []
    count = 0
    x = 0
    for mark in marks:
        while x < mark:
            x += 1
            if pred(x):
                count += 1
        reports.append(DensityReport(mark, count))
    return reports


@dataclass(frozen=True)
class FiberBound:
    """Finite form of "a set missing a whole phi-fiber is not generic".

    If none of the ``fiber_size`` members of ``phi^-1(fiber)`` in
    ``[1, n]`` satisfy the predicate, ``p_n`` is at most ``upper``.
    """

    fiber: int
    n: int
    fiber_size: int
    hits: int

    @property
    def active(self) -> bool:
        return self.hits == 0

    @property
    def upper(self) -> Fraction:
        if not self.active:
            return Fraction(1)
        return 1 - Fraction(self.fiber_size, self.n)


def fiber_bound(pred: Predicate, fiber: int, n: int) -> FiberBound:
    require_positive("fiber", fiber)
    require_positive("n", n)
    size = phi_preimage_count(fiber, n)
    hits = sum(1 for j in range(size) if pred(phi_fiber(fiber, j)))
    return FiberBound(fiber, n, size, hits)


# Default tolerance for classify_report.
DEFAULT_TOL = Fraction(1, 100)


class DensityClass(Enum):
    NEGLIGIBLE_LIKE = "negligible-like"
    GENERIC_LIKE = "generic-like"
    INTERMEDIATE = "intermediate"


def classify_report(report: DensityReport, tol: Fraction) -> DensityClass:
    """Label a finite density. Says nothing about the limit."""
    if tol < 0:
        raise ValueError("tol must be non-negative")
    if report.density <= tol:
        return DensityClass.NEGLIGIBLE_LIKE
    if report.density >= 1 - tol:
        return DensityClass.GENERIC_LIKE
    return DensityClass.INTERMEDIATE
