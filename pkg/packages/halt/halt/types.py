"""Shared type aliases, outcomes and errors for the halt lab."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

PositiveInt = int
GoedelIndex = int

Predicate = Callable[[int], bool]


class Status(Enum):
    HALTED = "halted"
    OUT_OF_BUDGET = "out_of_budget"


@dataclass(frozen=True, slots=True)
class EvalOutcome:
    """Result of a budgeted evaluation.

    ``value`` is set only when ``status`` is HALTED. An out-of-budget
    outcome always reports ``steps_used`` equal to the budget it ran under.
    """

    status: Status
    value: int | None
    steps_used: int

    @classmethod
    def halted(cls, value: int, steps: int) -> EvalOutcome:
        return cls(Status.HALTED, value, steps)

    @classmethod
    def out_of_budget(cls, budget: int) -> EvalOutcome:
        return cls(Status.OUT_OF_BUDGET, None, budget)

    @property
    def is_halted(self) -> bool:
        return self.status is Status.HALTED

    def describe(self) -> str:
        if self.status is Status.HALTED:
            return f"halted {self.value} steps={self.steps_used}"
        return f"out_of_budget steps={self.steps_used}"


class HaltLabError(Exception):
    """Base class for every error raised by the halt packages."""


class ProgramSyntaxError(HaltLabError, ValueError):
    """Raised when program text cannot be parsed."""

    def __init__(self, line_number: int, message: str) -> None:
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class JumpTargetError(ProgramSyntaxError):
    """Raised when a DECJZ target lies outside [1, L+1]."""


class RegisterCapError(ProgramSyntaxError):
    """Raised when a register index exceeds the configured cap."""


class SearchCapError(HaltLabError):
    """Raised when a capped search runs out of candidates."""

    def __init__(self, cap: int, message: str) -> None:
        self.cap = cap
        super().__init__(message)


def require_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
