"""Total Goedel numbering of counter-machine programs.

A program ``[i1, ..., iL]`` encodes as::

    pair(L + 1, pair(c(i1), pair(c(i2), ... c(iL))))

with ``c(i) = pair(opcode, pair(register + 1, target))`` (opcode 1 for INC,
2 for DECJZ; INC always carries target 1). The empty program is
``pair(1, 1) == 1``.

Decoding is total. Any index that the encoder could not have produced
(an unknown opcode, an INC with a target, a jump outside the program, a
register or length beyond the caps) decodes to :data:`DIVERGING`.
"""
from __future__ import annotations

from functools import lru_cache

from halt.encodings import pair, unpair
from halt.program import (
    DEFAULT_CAPS,
    DIVERGING,
    EMPTY,
    Instruction,
    MachineCaps,
    Op,
    Program,
)


def instruction_code(ins: Instruction) -> int:
    target = ins.target if ins.op is Op.DECJZ else 1
    return pair(ins.op.value, pair(ins.register + 1, target))


def encode_program(program: Program) -> int:
    codes = [instruction_code(ins) for ins in program.instructions]
    body = codes[-1] if codes else 1
    for code in reversed(codes[:-1]):
        body = pair(code, body)
    return pair(len(codes) + 1, body)


def decode_index(e: int, caps: MachineCaps = DEFAULT_CAPS) -> Program:
    length_plus_one, body = unpair(e)
    length = length_plus_one - 1
    if length == 0:
        return EMPTY
    if length > caps.max_length:
        return DIVERGING

    codes: list[int] = []
    for remaining in range(length - 1, 0, -1):
        if body == 1:
            # unpair(1) == (1, 1): the rest of the program is code 1.
            codes.extend([1] * remaining)
            break
        code, body = unpair(body)
        codes.append(code)
    codes.append(body)

    instructions: list[Instruction] = []
    for code in codes:
        ins = _decode_instruction(code, length)
        if ins is None or ins.register >= caps.max_registers:
            return DIVERGING
        instructions.append(ins)
    return Program(tuple(instructions))


@lru_cache(maxsize=4096)
def _decode_instruction(code: int, length: int) -> Instruction | None:
    opcode, rest = unpair(code)
    register_plus_one, target = unpair(rest)
    if opcode == Op.INC.value and target == 1:
        return Instruction.inc(register_plus_one - 1)
    if opcode == Op.DECJZ.value and target <= length + 1:
        return Instruction.decjz(register_plus_one - 1, target)
    return None
