"""Dovetailed one-one enumeration E of a halting set.

Round ``s`` (s = 1, 2, ...) evaluates every input ``x <= s`` under budget
``s``, in ascending ``x``, and emits ``x`` the first time it halts. Each
input keeps a resumable :class:`~halt.machine.Machine`, so a round only
executes the steps added since the previous one; the emitted order is
exactly that of re-running from scratch.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from halt.machine import Machine
from halt.types import EvalOutcome, require_positive

from halt_universal.universal import Evaluable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DomainHit:
    x: int
    outcome: EvalOutcome
    round: int


@dataclass(frozen=True)
class DomainEnumeration:
    """The first members of E. ``exhausted`` means round_cap ran out first."""

    members: tuple[int, ...]
    exhausted: bool
    rounds_used: int


def iter_domain(
    u: Evaluable, round_cap: int, *, limit: int | None = None,
) -> Iterator[DomainHit]:
    """Yield E in order, stopping after ``round_cap`` rounds.

    ``limit`` restricts the enumeration to inputs ``x <= limit``; the
    relative order of those inputs is unchanged.
    """
    require_positive("round_cap", round_cap)
    runs: dict[int, Machine] = {}
    pending: list[int] = []
    for s in range(1, round_cap + 1):
        if limit is None or s <= limit:
            runs[s] = u.start(s)
            pending.append(s)
        still_running: list[int] = []
        for x in pending:
            outcome = runs[x].run_until(s)
            if outcome.is_halted:
                del runs[x]
                yield DomainHit(x, outcome, s)
            else:
                still_running.append(x)
        pending = still_running
        if limit is not None and s >= limit and not pending:
            return


def enumerate_domain(u: Evaluable, count: int, round_cap: int) -> DomainEnumeration:
    """Return the first ``count`` members of E, or fewer if the rounds run out."""
    require_positive("count", count)
    members: list[int] = []
    for hit in iter_domain(u, round_cap):
        members.append(hit.x)
        if len(members) == count:
            return DomainEnumeration(tuple(members), exhausted=False, rounds_used=hit.round)
    logger.info(
        "domain enumeration exhausted %d rounds with %d of %d members",
        round_cap, len(members), count,
    )
    return DomainEnumeration(tuple(members), exhausted=True, rounds_used=round_cap)
