"""Counter-machine programs and their line-based text format.

Format (UTF-8, one instruction per line, addresses 1-based)::

    INC <reg>
    DECJZ <reg> <target>
    # comment

Blank lines and comments do not occupy an address. ``target`` may be
``L + 1``, which halts the machine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from halt.types import JumpTargetError, ProgramSyntaxError, RegisterCapError


@dataclass(frozen=True)
class MachineCaps:
    """Limits applied to parsed and decoded programs.

    Attributes:
        max_registers: Register indices must be below this value.
        max_length: Longest program the numbering will decode.
    """

    max_registers: int = 64
    max_length: int = 2**16


DEFAULT_CAPS = MachineCaps()


class Op(Enum):
    INC = 1
    DECJZ = 2


@dataclass(frozen=True, slots=True)
class Instruction:
    op: Op
    register: int
    target: int = 1

    @classmethod
    def inc(cls, register: int) -> Instruction:
        return cls(Op.INC, register)

    @classmethod
    def decjz(cls, register: int, target: int) -> Instruction:
        return cls(Op.DECJZ, register, target)

    def to_text(self) -> str:
        if self.op is Op.INC:
            return f"INC {self.register}"
        return f"DECJZ {self.register} {self.target}"


@dataclass(frozen=True, slots=True)
class Program:
    """An immutable instruction sequence. Safe to share across threads."""

    instructions: tuple[Instruction, ...] = ()
    register_count: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        halt_address = len(self.instructions) + 1
        highest = 0
        for address, ins in enumerate(self.instructions, start=1):
            if ins.register < 0:
                raise ValueError(f"negative register at address {address}")
            if ins.op is Op.DECJZ and not 1 <= ins.target <= halt_address:
                raise ValueError(
                    f"jump target {ins.target} at address {address} outside [1, {halt_address}]"
                )
            highest = max(highest, ins.register)
        object.__setattr__(self, "register_count", highest + 1)

    @property
    def length(self) -> int:
        return len(self.instructions)

    def __len__(self) -> int:
        return len(self.instructions)


EMPTY = Program()
"""The identity: halts immediately, returning its input."""

DIVERGING = Program((Instruction.decjz(1, 1),))
"""The canonical diverging program: r1 stays 0, so it jumps to itself forever."""


def parse_program(text: str, caps: MachineCaps = DEFAULT_CAPS) -> Program:
    """Parse program text. Raises a ProgramSyntaxError subclass on bad input."""
    raw: list[tuple[int, Op, int, int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        mnemonic = parts[0].upper()
        try:
            numbers = [int(p, 10) for p in parts[1:]]
        except ValueError:
            raise ProgramSyntaxError(line_number, f"non-decimal operand in {body!r}") from None
        if mnemonic == "INC" and len(numbers) == 1:
            op, register, target = Op.INC, numbers[0], 1
        elif mnemonic == "DECJZ" and len(numbers) == 2:
            op, register, target = Op.DECJZ, numbers[0], numbers[1]
        else:
            raise ProgramSyntaxError(line_number, f"expected INC <reg> or DECJZ <reg> <target>, got {body!r}")
        if not 0 <= register < caps.max_registers:
            raise RegisterCapError(
                line_number, f"register {register} outside [0, {caps.max_registers - 1}]"
            )
        raw.append((line_number, op, register, target))

    halt_address = len(raw) + 1
    for line_number, op, _, target in raw:
        if op is Op.DECJZ and not 1 <= target <= halt_address:
            raise JumpTargetError(line_number, f"jump target {target} outside [1, {halt_address}]")
    return Program(tuple(Instruction(op, register, target) for _, op, register, target in raw))


def format_program(program: Program) -> str:
    """Canonical text for ``program``; ``parse_program`` reads it back unchanged."""
    return "".join(ins.to_text() + "\n" for ins in program.instructions)
