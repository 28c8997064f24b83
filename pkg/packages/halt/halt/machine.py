"""Machine - step-bounded counter-machine interpreter and the evaluator Gamma.

Semantics: the program counter starts at address 1, ``r0 := x - 1`` and
every other register is 0. ``INC r`` adds one and advances; ``DECJZ r t``
jumps to ``t`` when ``r`` is zero, otherwise decrements and advances.
Reaching address ``L + 1`` halts with value ``r0 + 1``. Each executed
instruction is one step; halting itself is free.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

from halt.numbering import decode_index
from halt.program import DIVERGING, Op, Program
from halt.types import EvalOutcome, require_positive

# (is_inc, register, zero-based jump target)
_Compiled = tuple[tuple[bool, int, int], ...]


@lru_cache(maxsize=4096)
def _compile(program: Program) -> _Compiled:
    return tuple(
        (ins.op is Op.INC, ins.register, ins.target - 1)
        for ins in program.instructions
    )


class Machine:
    """A resumable run of one program on one input.

    Register state is private to the instance; the Program itself is
    shared read-only. ``run_until`` may be called repeatedly with growing
    budgets and only executes the new steps.
    """

    def __init__(self, program: Program, x: int) -> None:
        require_positive("input", x)
        self._program = program
        self._code = _compile(program)
        self._end = len(self._code)
        self._registers = [0] * program.register_count
        self._registers[0] = x - 1
        self._pc = 0
        self._steps = 0
        self._diverges = program == DIVERGING
        self._halt_hooks: list[Callable[[EvalOutcome], None]] = []
        self._announced = False

    @property
    def program(self) -> Program:
        return self._program

    @property
    def steps(self) -> int:
        return self._steps

    @property
    def pc(self) -> int:
        """Current 1-based address."""
        return self._pc + 1

    @property
    def halted(self) -> bool:
        return self._pc == self._end

    @property
    def registers(self) -> tuple[int, ...]:
        return tuple(self._registers)

    def on_halt(self, hook: Callable[[EvalOutcome], None]) -> None:
        self._halt_hooks.append(hook)

    def step(self) -> bool:
        """Execute one instruction. Returns True once the machine has halted."""
        if not self.halted:
            self.run_until(self._steps + 1)
        return self.halted

    def run(self, n: int) -> EvalOutcome:
        """Advance by up to ``n`` more steps."""
        return self.run_until(self._steps + n)

    def run_until(self, budget: int) -> EvalOutcome:
        """Advance until halted or ``budget`` total steps have been used."""
        require_positive("budget", budget)
        if self._diverges:
            self._steps = max(self._steps, budget)
            return EvalOutcome.out_of_budget(budget)

        code = self._code
        regs = self._registers
        end = self._end
        pc = self._pc
        steps = self._steps
        while pc != end and steps < budget:
            is_inc, reg, target = code[pc]
            if is_inc:
                regs[reg] += 1
                pc += 1
            elif regs[reg]:
                regs[reg] -= 1
                pc += 1
            else:
                pc = target
            steps += 1
        self._pc = pc
        self._steps = steps

        if pc != end or steps > budget:
            return EvalOutcome.out_of_budget(budget)
        outcome = EvalOutcome.halted(regs[0] + 1, steps)
        if not self._announced:
            self._announced = True
            for hook in self._halt_hooks:
                hook(outcome)
        return outcome


def evaluate(program: Program, x: int, budget: int) -> EvalOutcome:
    """Run ``program`` on ``x`` for at most ``budget`` steps."""
    return Machine(program, x).run_until(budget)


def gamma(e: int, x: int, budget: int) -> EvalOutcome:
    """The enumeration evaluator: run the program with index ``e`` on ``x``."""
    return evaluate(decode_index(e), x, budget)
