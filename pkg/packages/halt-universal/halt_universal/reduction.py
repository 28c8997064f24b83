"""The reduction theta and its enumerated-set variant.

``theta(S, n)`` is the least member of ``S`` in the phi-fiber of ``n``.
For a generic S every fiber meets S, so with a decider for
``S & Halt(U_phi)`` one could decide ``Halt(V)``:
``n in Halt(V) iff theta(n) in S & Halt(U_phi)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from halt.encodings import phi, phi_fiber
from halt.machine import evaluate
from halt.program import Program
from halt.types import Predicate, SearchCapError, require_positive


def theta(s_pred: Predicate, n: int, search_cap: int) -> int:
    """Least ``k <= search_cap`` with ``s_pred(k)`` and ``phi(k) == n``."""
    require_positive("n", n)
    for j in itertools.count():
        k = phi_fiber(n, j)
        if k > search_cap:
            break
        if s_pred(k):
            return k
    raise SearchCapError(search_cap, f"no member of the phi-fiber of {n} up to {search_cap}")


@dataclass(frozen=True)
class CeSetSpec:
    """A computably enumerable set given by a one-one enumeration.

    ``enumerator`` returns a fresh iterator over E(1), E(2), ...;
    :meth:`members` drops repeats so the emitted sequence is one-one.
    """

    enumerator: Callable[[], Iterator[int]]
    claimed_density: Fraction | None = None
    name: str = "ce"

    def members(self) -> Iterator[int]:
        seen: set[int] = set()
        for value in self.enumerator():
            if value not in seen:
                seen.add(value)
                yield value

    @classmethod
    def from_program(
        cls,
        program: Program,
        budget: int,
        *,
        max_index: int = 10**6,
        claimed_density: Fraction | None = None,
    ) -> CeSetSpec:
        """E(i) is the program's value on ``i``; indices that exhaust ``budget`` are skipped."""
        require_positive("budget", budget)

        def _run() -> Iterator[int]:
            for i in range(1, max_index + 1):
                outcome = evaluate(program, i, budget)
                if outcome.value is not None:
                    yield outcome.value

        return cls(_run, claimed_density, name="program")

    @classmethod
    def from_predicate(
        cls, pred: Predicate, *, claimed_density: Fraction | None = None, name: str = "predicate",
    ) -> CeSetSpec:
        """Members of a decidable set in increasing order. The set must be infinite."""

        def _scan() -> Iterator[int]:
            return (x for x in itertools.count(1) if pred(x))

        return cls(_scan, claimed_density, name=name)


def theta_enumerated(ce: CeSetSpec, n: int, enum_cap: int) -> int:
    """``E(k*)`` for the least ``k* <= enum_cap`` with ``phi(E(k*)) == n``."""
    require_positive("n", n)
    for member in itertools.islice(ce.members(), enum_cap):
        if phi(member) == n:
            return member
    raise SearchCapError(enum_cap, f"none of the first {enum_cap} members of {ce.name} has phi = {n}")
