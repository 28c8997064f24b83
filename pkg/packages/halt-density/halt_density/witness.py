"""Almost-decidability witness harness.

A witness claims a decidable set R of high density and a decider d for
``R & Halt(U)``. The harness sweeps ``[1, N]`` under a step budget and
can only ever refute: a point of R on which U halts but d answers no is
a contradiction. A point d accepts but U does not finish within the
budget is inconclusive. A witness that survives is reported as
"unrefuted at (N, budget)", never as valid.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from halt.encodings import is_square
from halt.sweep import DEFAULT_SWEEP, SweepConfig, map_chunks
from halt.types import Predicate, require_positive
from halt_universal.universal import Evaluable

from halt_density.density import DensityReport, density_exact

logger = logging.getLogger(__name__)


class ContradictionKind(Enum):
    HALTS_BUT_REJECTED = "halts-but-rejected"


class Verdict(Enum):
    REFUTED = "refuted"
    UNREFUTED = "unrefuted"


@dataclass(frozen=True)
class Witness:
    """A claimed pair (R, decider of R & Halt(U)).

    Attributes:
        r_pred: Decider of R.
        d_pred: Claimed decider of ``R & Halt(U)``; consulted only on R.
        claimed_density: Claimed ``d(R)`` in ``(0, 1]``.
    """

    r_pred: Predicate
    d_pred: Predicate
    claimed_density: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if not 0 < self.claimed_density <= 1:
            raise ValueError(f"claimed_density {self.claimed_density} outside (0, 1]")


def restrict_off_squares(w: Witness) -> Witness:
    """The witness for ``R' = R minus squares`` with decider ``not square and d``.

    For the mixed combinator U agrees with its auxiliary F off the
    squares, so a witness for Halt(F) turns into one for Halt(U).
    """
    r_pred, d_pred = w.r_pred, w.d_pred
    return Witness(
        r_pred=lambda x: not is_square(x) and r_pred(x),
        d_pred=lambda x: not is_square(x) and d_pred(x),
        claimed_density=w.claimed_density,
    )


@dataclass(frozen=True)
class Contradiction:
    x: int
    kind: ContradictionKind = ContradictionKind.HALTS_BUT_REJECTED


@dataclass(frozen=True)
class _Tally:
    contradictions: tuple[int, ...] = ()
    confirmations: int = 0
    inconclusive: int = 0
    consistent_rejections: int = 0

    def merge(self, other: _Tally) -> _Tally:
        return _Tally(
            self.contradictions + other.contradictions,
            self.confirmations + other.confirmations,
            self.inconclusive + other.inconclusive,
            self.consistent_rejections + other.consistent_rejections,
        )


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of one sweep over ``[1, n]``.

    ``consistent_rejections`` counts points of R that d rejects and that
    did not halt within the budget.
    """

    n: int
    budget: int
    contradictions: tuple[Contradiction, ...]
    confirmations: int
    inconclusive: int
    consistent_rejections: int
    density_of_r: DensityReport
    claimed_density: Fraction = Fraction(1)

    @property
    def verdict(self) -> Verdict:
        return Verdict.REFUTED if self.contradictions else Verdict.UNREFUTED

    def to_dict(self) -> dict[str, object]:
        d = self.density_of_r.density
        return {
            "range": [1, self.n],
            "budget": self.budget,
            "contradictions": [{"x": c.x, "kind": c.kind.value} for c in self.contradictions],
            "confirmations": self.confirmations,
            "inconclusive": self.inconclusive,
            "consistent_rejections": self.consistent_rejections,
            "density": {"num": d.numerator, "den": d.denominator},
            "claimed_density": {
                "num": self.claimed_density.numerator,
                "den": self.claimed_density.denominator,
            },
            "verdict": self.verdict.value,
        }


def validate_witness(
    u: Evaluable, w: Witness, n: int, budget: int, config: SweepConfig = DEFAULT_SWEEP,
) -> WitnessReport:
    """Check ``w`` against U on every point of R in ``[1, n]``.

    Contradictions are re-evaluated under the same budget before they are
    reported; one that does not reproduce is dropped with a warning.
    """
    require_positive("n", n)
    require_positive("budget", budget)

    def _check(chunk: range) -> _Tally:
        contradictions: list[int] = []
        confirmations = inconclusive = rejections = 0
        for x in chunk:
            if not w.r_pred(x):
                continue
            halts = u.evaluate(x, budget).is_halted
            if w.d_pred(x):
                if halts:
                    confirmations += 1
                else:
                    inconclusive += 1
            elif halts:
                contradictions.append(x)
            else:
                rejections += 1
        return _Tally(tuple(contradictions), confirmations, inconclusive, rejections)

    tally = _Tally()
    for part in map_chunks(_check, n, config):
        tally = tally.merge(part)

    confirmed: list[Contradiction] = []
    for x in tally.contradictions:
        if u.evaluate(x, budget).is_halted and not w.d_pred(x):
            confirmed.append(Contradiction(x))
        else:
            logger.warning("contradiction at %d did not reproduce; dropped", x)
    if tally.inconclusive:
        logger.info(
            "%d accepted points did not halt within %d steps (inconclusive)",
            tally.inconclusive, budget,
        )

    return WitnessReport(
        n=n,
        budget=budget,
        contradictions=tuple(confirmed),
        confirmations=tally.confirmations,
        inconclusive=tally.inconclusive,
        consistent_rejections=tally.consistent_rejections,
        density_of_r=density_exact(w.r_pred, n, config),
        claimed_density=w.claimed_density,
    )


@dataclass(frozen=True)
class RCheckReport:
    """A witness sweep plus the finite check ``|p_n(R) - r| <= tol``."""

    witness: WitnessReport
    r: Fraction
    tol: Fraction

    @property
    def density_gap(self) -> Fraction:
        return abs(self.witness.density_of_r.density - self.r)

    @property
    def density_ok(self) -> bool:
        return self.density_gap <= self.tol

    @property
    def passed(self) -> bool:
        return self.density_ok and self.witness.verdict is Verdict.UNREFUTED

    def to_dict(self) -> dict[str, object]:
        data = self.witness.to_dict()
        data["r"] = {"num": self.r.numerator, "den": self.r.denominator}
        data["tol"] = {"num": self.tol.numerator, "den": self.tol.denominator}
        data["density_ok"] = self.density_ok
        data["passed"] = self.passed
        return data


def r_decidability_check(
    u: Evaluable,
    w: Witness,
    r: Fraction,
    n: int,
    budget: int,
    tol: Fraction,
    config: SweepConfig = DEFAULT_SWEEP,
) -> RCheckReport:
    """Run :func:`validate_witness` and compare ``p_n(R)`` with ``r``."""
    if not 0 < r <= 1:
        raise ValueError(f"r {r} outside (0, 1]")
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return RCheckReport(validate_witness(u, w, n, budget, config), r, tol)
