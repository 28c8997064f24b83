"""halt - counter machines, Goedel numbering and integer encodings."""

from halt.encodings import (
    deinterleave,
    interleave,
    interleave_bound,
    is_square,
    pair,
    phi,
    phi_fiber,
    phi_preimage_count,
    square_split,
    unpair,
)
from halt.machine import Machine, evaluate, gamma
from halt.numbering import decode_index, encode_program
from halt.program import (
    DIVERGING,
    EMPTY,
    Instruction,
    MachineCaps,
    Op,
    Program,
    format_program,
    parse_program,
)
from halt.sweep import SweepConfig, count_where, map_chunks
from halt.types import (
    EvalOutcome,
    HaltLabError,
    JumpTargetError,
    ProgramSyntaxError,
    RegisterCapError,
    SearchCapError,
    Status,
)

__all__ = [
    "DIVERGING",
    "EMPTY",
    "EvalOutcome",
    "HaltLabError",
    "Instruction",
    "JumpTargetError",
    "Machine",
    "MachineCaps",
    "Op",
    "Program",
    "ProgramSyntaxError",
    "RegisterCapError",
    "SearchCapError",
    "Status",
    "SweepConfig",
    "count_where",
    "decode_index",
    "deinterleave",
    "encode_program",
    "evaluate",
    "format_program",
    "gamma",
    "interleave",
    "interleave_bound",
    "is_square",
    "map_chunks",
    "pair",
    "parse_program",
    "phi",
    "phi_fiber",
    "phi_preimage_count",
    "square_split",
    "unpair",
]
