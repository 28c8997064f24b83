"""Tests for the total Goedel numbering."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from halt.encodings import pair
from halt.numbering import decode_index, encode_program, instruction_code
from halt.program import (
    DIVERGING,
    EMPTY,
    Instruction,
    MachineCaps,
    Program,
    parse_program,
)


def _random_program(rng: random.Random, max_length: int = 20) -> Program:
    length = rng.randint(0, max_length)
    instructions = []
    for _ in range(length):
        register = rng.randrange(8)
        if rng.random() < 0.5:
            instructions.append(Instruction.inc(register))
        else:
            instructions.append(Instruction.decjz(register, rng.randint(1, length + 1)))
    return Program(tuple(instructions))


@st.composite
def programs(draw: st.DrawFn) -> Program:
    length = draw(st.integers(min_value=0, max_value=12))
    instructions = []
    for _ in range(length):
        register = draw(st.integers(min_value=0, max_value=63))
        if draw(st.booleans()):
            instructions.append(Instruction.inc(register))
        else:
            target = draw(st.integers(min_value=1, max_value=length + 1))
            instructions.append(Instruction.decjz(register, target))
    return Program(tuple(instructions))


class TestEncode:
    """Test encode_program on known programs."""

    def test_empty_is_one(self):
        assert encode_program(EMPTY) == pair(1, 1) == 1

    def test_successor(self):
        succ = parse_program("INC 0")
        assert instruction_code(succ.instructions[0]) == 1
        assert encode_program(succ) == pair(2, 1) == 3

    def test_nesting_is_right_associated(self):
        a, b, c = Instruction.inc(0), Instruction.inc(1), Instruction.decjz(0, 4)
        program = Program((a, b, c))
        expected = pair(4, pair(instruction_code(a), pair(instruction_code(b), instruction_code(c))))
        assert encode_program(program) == expected


class TestDecode:
    """Test decode_index round trips and totality."""

    def test_random_corpus_round_trips(self):
        rng = random.Random(7)
        for _ in range(100):
            program = _random_program(rng)
            assert decode_index(encode_program(program)) == program

    @given(programs())
    def test_round_trip_property(self, program):
        assert decode_index(encode_program(program)) == program

    def test_longest_corpus_program_round_trips(self):
        """Twenty wide DECJZ codes nest into an index of millions of bits."""
        program = Program(tuple(Instruction.decjz(7, 21) for _ in range(20)))
        e = encode_program(program)
        assert e.bit_length() > 10**7
        assert decode_index(e) == program

    def test_decode_is_total(self):
        rng = random.Random(11)
        for _ in range(1000):
            program = decode_index(rng.randint(1, 10**9))
            assert isinstance(program, Program)

    @settings(max_examples=200)
    @given(st.integers(min_value=1, max_value=2**64))
    def test_decoded_programs_respect_caps(self, e):
        program = decode_index(e)
        assert program.register_count <= 64
        assert program.length <= 2**16

    def test_decode_one_is_empty(self):
        assert decode_index(1) == EMPTY

    def test_unknown_opcode_diverges(self):
        bad = pair(2, pair(3, pair(1, 1)))
        assert decode_index(bad) == DIVERGING

    def test_inc_with_target_diverges(self):
        bad = pair(2, pair(1, pair(1, 2)))
        assert decode_index(bad) == DIVERGING

    def test_jump_outside_program_diverges(self):
        bad = pair(2, pair(2, pair(1, 5)))
        assert decode_index(bad) == DIVERGING

    def test_register_over_cap_diverges(self):
        index = encode_program(Program((Instruction.inc(10),)))
        assert decode_index(index, MachineCaps(max_registers=8)) == DIVERGING
        assert decode_index(index) == Program((Instruction.inc(10),))

    def test_length_over_cap_diverges(self):
        index = encode_program(parse_program("INC 0\nINC 0\nINC 0"))
        assert decode_index(index, MachineCaps(max_length=2)) == DIVERGING
