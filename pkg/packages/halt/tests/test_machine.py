"""Tests for the step-bounded interpreter, resumable runs and Gamma."""
import pytest

from halt.machine import Machine, evaluate, gamma
from halt.numbering import encode_program
from halt.program import DIVERGING, EMPTY, parse_program
from halt.types import EvalOutcome, Status

SUCC = parse_program("INC 0")
ADD_TWO = parse_program("INC 0\nINC 0")
CONST_ONE = parse_program("DECJZ 0 3\nDECJZ 1 1")
# r0 := 2 * r0 via r1, then back.
DOUBLE_PLUS = parse_program(
    """
    DECJZ 0 5
    INC 1
    INC 1
    DECJZ 2 1
    DECJZ 1 8
    INC 0
    DECJZ 2 5
    """
)

FIXTURES = {
    "identity": (EMPTY, lambda x: x),
    "successor": (SUCC, lambda x: x + 1),
    "constant-1": (CONST_ONE, lambda x: 1),
    "add-2": (ADD_TWO, lambda x: x + 2),
}


class TestEvaluate:
    """Test evaluate on the worked examples."""

    def test_empty_program_is_identity(self):
        assert evaluate(EMPTY, 5, 10) == EvalOutcome.halted(5, 0)

    def test_single_inc(self):
        assert evaluate(SUCC, 5, 10) == EvalOutcome.halted(6, 1)

    def test_self_loop_runs_out(self):
        outcome = evaluate(DIVERGING, 3, 1000)
        assert outcome == EvalOutcome.out_of_budget(1000)
        assert outcome.status is Status.OUT_OF_BUDGET
        assert outcome.value is None

    def test_budget_of_exactly_the_steps_needed(self):
        assert evaluate(ADD_TWO, 1, 2) == EvalOutcome.halted(3, 2)
        assert evaluate(ADD_TWO, 1, 1) == EvalOutcome.out_of_budget(1)

    def test_constant_one_clears_register(self):
        outcome = evaluate(CONST_ONE, 4, 100)
        # three decrement-and-loop rounds, then the zero jump
        assert outcome == EvalOutcome.halted(1, 7)

    def test_zero_jump_costs_a_step(self):
        assert evaluate(parse_program("DECJZ 1 2"), 9, 5) == EvalOutcome.halted(9, 1)

    def test_doubling_loop(self):
        for x in range(1, 20):
            outcome = evaluate(DOUBLE_PLUS, x, 10_000)
            assert outcome.is_halted
            assert outcome.value == 2 * (x - 1) + 1

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            evaluate(SUCC, 1, 0)

    def test_input_must_be_positive(self):
        with pytest.raises(ValueError):
            evaluate(SUCC, 0, 10)

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_fixtures_agree_with_their_functions(self, name):
        program, fn = FIXTURES[name]
        for x in range(1, 101):
            outcome = evaluate(program, x, 10_000)
            assert outcome.is_halted and outcome.value == fn(x)

    def test_describe(self):
        assert EvalOutcome.halted(6, 1).describe() == "halted 6 steps=1"
        assert EvalOutcome.out_of_budget(10).describe() == "out_of_budget steps=10"


class TestMachine:
    """Test the resumable Machine."""

    def test_initial_state(self):
        machine = Machine(DOUBLE_PLUS, 4)
        assert machine.pc == 1
        assert machine.steps == 0
        assert machine.registers[0] == 3
        assert not machine.halted

    def test_step_by_step_matches_run(self):
        machine = Machine(DOUBLE_PLUS, 6)
        while not machine.step():
            pass
        assert machine.run_until(10_000) == evaluate(DOUBLE_PLUS, 6, 10_000)

    def test_resume_executes_only_new_steps(self):
        machine = Machine(DOUBLE_PLUS, 5)
        assert not machine.run_until(3).is_halted
        assert machine.steps == 3
        machine.run(2)
        assert machine.steps == 5
        assert machine.run_until(10_000) == evaluate(DOUBLE_PLUS, 5, 10_000)

    def test_smaller_budget_after_halting_reports_out_of_budget(self):
        machine = Machine(ADD_TWO, 1)
        assert machine.run_until(10) == EvalOutcome.halted(3, 2)
        assert machine.run_until(1) == EvalOutcome.out_of_budget(1)
        assert machine.run_until(2) == EvalOutcome.halted(3, 2)

    def test_halt_hook_fires_once(self):
        seen = []
        machine = Machine(SUCC, 1)
        machine.on_halt(seen.append)
        machine.run_until(5)
        machine.run_until(6)
        assert seen == [EvalOutcome.halted(2, 1)]

    def test_halt_hook_silent_when_diverging(self):
        seen = []
        machine = Machine(DIVERGING, 1)
        machine.on_halt(seen.append)
        assert machine.run_until(50) == EvalOutcome.out_of_budget(50)
        assert machine.steps == 50
        assert seen == []

    def test_diverging_shape_without_fast_path(self):
        loop = parse_program("INC 1\nDECJZ 2 1")
        assert evaluate(loop, 1, 777) == EvalOutcome.out_of_budget(777)


class TestGamma:
    """Test the enumeration evaluator."""

    def test_successor_index(self):
        assert gamma(encode_program(SUCC), 7, 100) == EvalOutcome.halted(8, 1)

    def test_empty_index(self):
        assert gamma(encode_program(EMPTY), 5, 10).value == 5

    @pytest.mark.parametrize("budget", [1, 10, 1000])
    def test_diverging_index(self, budget):
        for x in (1, 2, 50):
            assert gamma(encode_program(DIVERGING), x, budget) == EvalOutcome.out_of_budget(budget)

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_universality_smoke(self, name):
        program, fn = FIXTURES[name]
        e = encode_program(program)
        for x in range(1, 101):
            assert gamma(e, x, 10_000).value == fn(x)
