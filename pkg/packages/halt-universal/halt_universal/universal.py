"""Universal functions built from the counter-machine evaluator.

``V(z) = Gamma(e, x)`` when ``z = interleave(e, x)`` and diverges off the
interleave image. The derived functions wrap V:

- square embed: ``V(y)`` on ``x = y*y``, constant 1 elsewhere;
- phi pullback: ``V(phi(x))``;
- mixed: ``V(y)`` on ``x = y*y``, a caller-supplied program F elsewhere.

Every evaluation reduces to running one program on one input, so
:meth:`UniversalSpec.resolve` does the bookkeeping (square roots, phi,
deinterleaving) for free and the budget is spent only on machine steps.
The constant branch resolves to the identity on input 1 and the
divergent branch to the canonical diverging program.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Protocol

from halt.encodings import deinterleave, phi, square_split
from halt.machine import Machine
from halt.numbering import decode_index
from halt.program import DEFAULT_CAPS, DIVERGING, EMPTY, MachineCaps, Program, parse_program
from halt.types import EvalOutcome, HaltLabError

Resolution = tuple[Program, int]

_CONSTANT: Resolution = (EMPTY, 1)
_DIVERGE: Resolution = (DIVERGING, 1)


class UniversalSpecError(HaltLabError, ValueError):
    """Raised for an unknown universal-function name."""


class Evaluable(Protocol):
    """Anything the enumeration, compiler and witness code can run."""

    def start(self, x: int) -> Machine: ...

    def evaluate(self, x: int, budget: int) -> EvalOutcome: ...


class UniversalKind(Enum):
    BASE_V = "base_v"
    SQUARE_EMBED = "square_embed"
    PHI_PULLBACK = "phi_pullback"
    MIXED = "mixed"


@lru_cache(maxsize=4096)
def _program_at(e: int, caps: MachineCaps) -> Program:
    return decode_index(e, caps)


@dataclass(frozen=True)
class UniversalSpec:
    """A named universal function over the shared base V.

    ``aux_program`` is the F of the mixed combinator and must be absent
    for every other kind.
    """

    kind: UniversalKind
    aux_program: Program | None = None
    caps: MachineCaps = DEFAULT_CAPS

    def __post_init__(self) -> None:
        if (self.kind is UniversalKind.MIXED) != (self.aux_program is not None):
            raise UniversalSpecError("only the mixed combinator takes an auxiliary program")

    @classmethod
    def base_v(cls) -> UniversalSpec:
        return cls(UniversalKind.BASE_V)

    @classmethod
    def square_embed(cls) -> UniversalSpec:
        return cls(UniversalKind.SQUARE_EMBED)

    @classmethod
    def phi_pullback(cls) -> UniversalSpec:
        return cls(UniversalKind.PHI_PULLBACK)

    @classmethod
    def mixed(cls, f_program: Program) -> UniversalSpec:
        return cls(UniversalKind.MIXED, f_program)

    @classmethod
    def from_name(cls, name: str) -> UniversalSpec:
        """Parse ``base_v``, ``square_embed``, ``phi_pullback`` or ``mixed:<file.cm>``."""
        if name.startswith("mixed:"):
            path = Path(name.removeprefix("mixed:"))
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as exc:
                raise UniversalSpecError(f"cannot read mixed program {path}: {exc}") from exc
            return cls.mixed(parse_program(text))
        try:
            kind = UniversalKind(name)
        except ValueError:
            raise UniversalSpecError(
                f"unknown universal {name!r}; expected base_v, square_embed, "
                "phi_pullback or mixed:<program-file>"
            ) from None
        return cls(kind)

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def base(self) -> UniversalSpec:
        """The underlying V."""
        if self.kind is UniversalKind.BASE_V:
            return self
        return UniversalSpec(UniversalKind.BASE_V, caps=self.caps)

    def resolve(self, x: int) -> Resolution:
        """The (program, input) pair this function runs on ``x``."""
        if self.kind is UniversalKind.BASE_V:
            return self._resolve_v(x)
        if self.kind is UniversalKind.PHI_PULLBACK:
            return self._resolve_v(phi(x))
        root = square_split(x)
        if root is not None:
            return self._resolve_v(root)
        if self.kind is UniversalKind.SQUARE_EMBED:
            return _CONSTANT
        assert self.aux_program is not None
        return self.aux_program, x

    def _resolve_v(self, z: int) -> Resolution:
        decoded = deinterleave(z)
        if decoded is None:
            return _DIVERGE
        e, x = decoded
        return _program_at(e, self.caps), x

    def start(self, x: int) -> Machine:
        return Machine(*self.resolve(x))

    def evaluate(self, x: int, budget: int) -> EvalOutcome:
        return self.start(x).run_until(budget)


BASE_V = UniversalSpec.base_v()
SQUARE_EMBED = UniversalSpec.square_embed()
PHI_PULLBACK = UniversalSpec.phi_pullback()


def v_eval(z: int, budget: int) -> EvalOutcome:
    return BASE_V.evaluate(z, budget)


def u_sq_eval(x: int, budget: int) -> EvalOutcome:
    return SQUARE_EMBED.evaluate(x, budget)


def u_phi_eval(x: int, budget: int) -> EvalOutcome:
    return PHI_PULLBACK.evaluate(x, budget)


def u_mix_eval(x: int, f_program: Program, budget: int) -> EvalOutcome:
    return UniversalSpec.mixed(f_program).evaluate(x, budget)
