"""Tests for program text parsing and formatting."""
import pytest

from halt.program import (
    DIVERGING,
    EMPTY,
    Instruction,
    MachineCaps,
    Program,
    format_program,
    parse_program,
)
from halt.types import JumpTargetError, ProgramSyntaxError, RegisterCapError


class TestParse:
    """Test parse_program on well-formed text."""

    def test_single_inc(self):
        assert parse_program("INC 0") == Program((Instruction.inc(0),))

    def test_empty_text(self):
        program = parse_program("")
        assert program == EMPTY
        assert program.length == 0

    def test_self_loop(self):
        assert parse_program("DECJZ 1 1") == DIVERGING

    def test_comments_and_blank_lines_take_no_address(self):
        text = "# clear r0\n\nDECJZ 0 3   # done when zero\n\nDECJZ 1 1\n"
        program = parse_program(text)
        assert program.instructions == (
            Instruction.decjz(0, 3),
            Instruction.decjz(1, 1),
        )

    def test_halt_target_allowed(self):
        program = parse_program("DECJZ 0 2")
        assert program.instructions[0].target == 2

    def test_mnemonics_case_insensitive(self):
        assert parse_program("inc 3") == Program((Instruction.inc(3),))

    def test_register_count(self):
        assert parse_program("INC 5\nINC 2").register_count == 6
        assert EMPTY.register_count == 1


class TestParseErrors:
    """Test parse_program failures carry line numbers."""

    def test_unknown_mnemonic(self):
        with pytest.raises(ProgramSyntaxError) as info:
            parse_program("INC 0\nJMP 1")
        assert info.value.line_number == 2

    def test_wrong_arity(self):
        with pytest.raises(ProgramSyntaxError):
            parse_program("DECJZ 0")

    def test_non_decimal_operand(self):
        with pytest.raises(ProgramSyntaxError) as info:
            parse_program("\nINC x")
        assert info.value.line_number == 2

    def test_jump_past_halt(self):
        with pytest.raises(JumpTargetError) as info:
            parse_program("INC 0\nDECJZ 0 4")
        assert info.value.line_number == 2

    def test_jump_to_zero(self):
        with pytest.raises(JumpTargetError):
            parse_program("DECJZ 0 0")

    def test_register_over_cap(self):
        with pytest.raises(RegisterCapError):
            parse_program("INC 64")

    def test_custom_cap(self):
        assert parse_program("INC 64", MachineCaps(max_registers=65)).register_count == 65
        with pytest.raises(RegisterCapError):
            parse_program("INC 3", MachineCaps(max_registers=3))

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_program("NOPE")


class TestProgramInvariants:
    """Test Program construction checks."""

    def test_direct_construction_rejects_bad_target(self):
        with pytest.raises(ValueError):
            Program((Instruction.decjz(0, 3),))

    def test_programs_are_hashable(self):
        assert hash(parse_program("INC 0")) == hash(Program((Instruction.inc(0),)))


class TestFormat:
    """Test canonical program text."""

    def test_format(self):
        program = Program((Instruction.inc(0), Instruction.decjz(2, 3)))
        assert format_program(program) == "INC 0\nDECJZ 2 3\n"

    def test_format_empty(self):
        assert format_program(EMPTY) == ""

    def test_parse_reads_format_back(self):
        program = parse_program("DECJZ 0 3\nINC 1\nDECJZ 4 1\nINC 0")
        assert parse_program(format_program(program)) == program
