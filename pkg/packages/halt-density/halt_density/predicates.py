"""PredicateRegistry - named decidable sets for density and witness runs."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from halt.encodings import is_square, phi
from halt.machine import evaluate
from halt.program import Program, parse_program
from halt.types import HaltLabError, Predicate, ProgramSyntaxError, require_positive

FIBER_PREFIX = "phi-fiber:"
PROGRAM_SUFFIX = ".cm"


class PredicateError(HaltLabError):
    """Raised for an unknown predicate or a program predicate that misbehaves."""


@dataclass(frozen=True)
class ProgramPredicate:
    """A counter-machine program read as a set: value 1 means member, 2 non-member.

    The program must halt within ``budget`` steps on every input it is
    asked about; overrunning or returning any other value is an error.
    """

    program: Program
    budget: int

    def __post_init__(self) -> None:
        require_positive("budget", self.budget)

    def __call__(self, x: int) -> bool:
        outcome = evaluate(self.program, x, self.budget)
        if outcome.value is None:
            raise PredicateError(f"predicate program did not halt on {x} within {self.budget} steps")
        if outcome.value == 1:
            return True
        if outcome.value == 2:
            return False
        raise PredicateError(f"predicate program returned {outcome.value} on {x}; expected 1 or 2")


def fiber_predicate(n: int) -> Predicate:
    """Membership in ``phi^-1(n)``."""
    require_positive("n", n)
    return lambda x: phi(x) == n


class PredicateRegistry:
    """Maps predicate name strings to callable predicates.

    Besides exact names, :meth:`get` understands ``phi-fiber:<n>`` and
    paths ending in ``.cm``, which load a :class:`ProgramPredicate` run
    under ``program_budget``.
    """

    def __init__(self, program_budget: int = 10_000) -> None:
        require_positive("program_budget", program_budget)
        self.program_budget = program_budget
        self._predicates: dict[str, Predicate] = {}

    def register(self, name: str, fn: Predicate) -> None:
        """Register a named predicate. Overwrites if already registered."""
        self._predicates[name] = fn

    def has(self, name: str) -> bool:
        return name in self._predicates

    def names(self) -> list[str]:
        return list(self._predicates)

    def get(self, name: str) -> Predicate:
        """Resolve ``name``. Raises PredicateError if nothing matches."""
        if name in self._predicates:
            return self._predicates[name]
        if name.startswith(FIBER_PREFIX):
            raw = name.removeprefix(FIBER_PREFIX)
            try:
                return fiber_predicate(int(raw))
            except ValueError:
                raise PredicateError(f"bad fiber index in {name!r}") from None
        if name.endswith(PROGRAM_SUFFIX):
            return self.load_program(Path(name))
        raise PredicateError(
            f"unknown predicate {name!r}; known: {', '.join(self.names())}, "
            f"{FIBER_PREFIX}<n>, <file>{PROGRAM_SUFFIX}"
        )

    def check(self, name: str, x: int) -> bool:
        return self.get(name)(x)

    def load_program(self, path: Path) -> ProgramPredicate:
        try:
            program = parse_program(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise PredicateError(f"cannot read predicate program {path}: {exc}") from exc
        except ProgramSyntaxError as exc:
            raise PredicateError(f"{path}: {exc}") from exc
        return ProgramPredicate(program, self.program_budget)


def default_registry(program_budget: int = 10_000) -> PredicateRegistry:
    """A registry holding ``squares``, ``nonsquares``, ``odds``, ``evens`` and ``all``."""
    registry = PredicateRegistry(program_budget)
    registry.register("squares", is_square)
    registry.register("nonsquares", lambda x: not is_square(x))
    registry.register("odds", lambda x: x % 2 == 1)
    registry.register("evens", lambda x: x % 2 == 0)
    registry.register("all", lambda x: True)
    return registry
