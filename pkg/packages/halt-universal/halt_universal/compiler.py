"""Compilers: index-and-argument to an input of a universal function.

``compile_cv`` is the total compiler of V (the interleave pairing),
``compile_phi`` the compiler of the phi pullback, and ``compile_cu`` the
dovetailed search that turns any programmable universal U into one whose
compiled inputs stay within ``k * x``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from halt.encodings import interleave, interleave_bound, pair, unpair
from halt.types import EvalOutcome, require_positive

from halt_universal.enumeration import iter_domain
from halt_universal.universal import Evaluable, v_eval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompilerConstants:
    """Goedel number ``g``, linear constant ``c`` and programmability constant ``k``."""

    g: int
    c: int
    k: int

    def __post_init__(self) -> None:
        require_positive("g", self.g)
        require_positive("c", self.c)
        require_positive("k", self.k)

    @property
    def index(self) -> int:
        """The compiler index ``pair(k, g)`` consumed by :func:`compile_cu`."""
        return compiler_index(self.k, self.g)


def constants_for_base(g: int) -> CompilerConstants:
    """Constants of V for the program with index ``g``: ``c = k = 2**(2*bitlen(g)+1)``."""
    bound = interleave_bound(g)
    return CompilerConstants(g=g, c=bound, k=bound)


def compiler_index(k: int, g: int) -> int:
    return pair(k, g)


def compile_cv(g: int, x: int) -> int:
    return interleave(g, x)


def compile_phi(g: int, x: int) -> int:
    """Least ``s`` with ``phi(s) == compile_cv(g, x)``, i.e. ``2**(compile_cv(g, x) - 1)``."""
    return 1 << (compile_cv(g, x) - 1)


class CompileStatus(Enum):
    FOUND = "found"
    TARGET_DIVERGED = "target-diverged"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class CompileResult:
    status: CompileStatus
    y: int | None
    target: EvalOutcome
    bound: int

    @property
    def found(self) -> bool:
        return self.status is CompileStatus.FOUND


def compile_cu(u: Evaluable, z: int, x: int, round_cap: int) -> CompileResult:
    """First member y of E with ``y <= k*x`` and ``U(y) == V(interleave(g, x))``.

    ``(k, g) = unpair(z)``. The target is evaluated under ``round_cap`` steps;
    a candidate is re-evaluated before it is returned. Inputs above ``k*x``
    can never qualify, so the enumeration is restricted to ``[1, k*x]``.
    """
    require_positive("x", x)
    k, g = unpair(z)
    bound = k * x
    target = v_eval(compile_cv(g, x), round_cap)
    if not target.is_halted:
        logger.info("target V(interleave(%d, %d)) did not halt within %d steps", g, x, round_cap)
        return CompileResult(CompileStatus.TARGET_DIVERGED, None, target, bound)

    for hit in iter_domain(u, round_cap, limit=bound):
        if hit.outcome.value != target.value:
            continue
        check = u.evaluate(hit.x, round_cap)
        if check.is_halted and check.value == target.value:
            logger.debug("compile_cu(%d, %d) -> %d in round %d", z, x, hit.x, hit.round)
            return CompileResult(CompileStatus.FOUND, hit.x, target, bound)
        logger.warning("candidate %d failed re-evaluation: %s", hit.x, check.describe())

    logger.info("compile_cu(%d, %d) exhausted %d rounds below bound %d", z, x, round_cap, bound)
    return CompileResult(CompileStatus.EXHAUSTED, None, target, bound)
