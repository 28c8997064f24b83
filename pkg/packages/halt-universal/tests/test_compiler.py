"""Tests for compile_cv, compile_phi and the dovetailed compiler search."""
import pytest

from halt.encodings import interleave, phi, phi_fiber
from halt.numbering import encode_program
from halt.program import DIVERGING, parse_program
from halt_universal.compiler import (
    CompilerConstants,
    CompileStatus,
    compile_cu,
    compile_cv,
    compile_phi,
    compiler_index,
    constants_for_base,
)
from halt_universal.universal import BASE_V, SQUARE_EMBED, u_phi_eval, v_eval

SUCC_INDEX = encode_program(parse_program("INC 0"))
ADD_TWO_INDEX = encode_program(parse_program("INC 0\nINC 0"))
CONST_ONE_INDEX = encode_program(parse_program("DECJZ 0 3\nDECJZ 1 1"))


class TestConstants:
    """Test CompilerConstants for V."""

    def test_successor_constants(self):
        consts = constants_for_base(SUCC_INDEX)
        assert SUCC_INDEX == 3
        assert consts == CompilerConstants(g=3, c=32, k=32)
        assert consts.index == compiler_index(32, 3)

    def test_constants_must_be_positive(self):
        with pytest.raises(ValueError):
            CompilerConstants(g=1, c=0, k=1)


class TestCompileCv:
    """Test the compilers of V and of the phi pullback."""

    def test_compile_cv_is_interleave(self):
        assert compile_cv(3, 7) == interleave(3, 7)

    def test_compile_phi_is_least_fiber_point(self):
        for x in range(1, 30):
            s = compile_phi(SUCC_INDEX, x)
            assert phi(s) == compile_cv(SUCC_INDEX, x)
            assert s == phi_fiber(phi(s), 0)

    def test_pullback_keeps_goedel_number(self):
        for x in range(1, 21):
            assert u_phi_eval(compile_phi(SUCC_INDEX, x), 1000).value == x + 1


class TestCompileCu:
    """Test the dovetailed compiler search."""

    def test_successor_witnesses_within_linear_bound(self):
        consts = constants_for_base(SUCC_INDEX)
        for x in range(1, 51):
            result = compile_cu(BASE_V, consts.index, x, round_cap=2000)
            assert result.status is CompileStatus.FOUND
            assert result.y is not None and result.y <= consts.k * x
            assert v_eval(result.y, 2000).value == x + 1
            assert result.target.value == x + 1

    def test_bound_one_excludes_image(self):
        result = compile_cu(BASE_V, compiler_index(1, ADD_TWO_INDEX), 1, round_cap=500)
        assert result.status is CompileStatus.EXHAUSTED
        assert result.y is None
        assert result.bound == 1

    def test_target_divergence_reported(self):
        g = encode_program(DIVERGING)
        result = compile_cu(BASE_V, compiler_index(1000, g), 3, round_cap=200)
        assert result.status is CompileStatus.TARGET_DIVERGED
        assert not result.found

    def test_square_embed_constant_target(self):
        z = compiler_index(constants_for_base(CONST_ONE_INDEX).k, CONST_ONE_INDEX)
        result = compile_cu(SQUARE_EMBED, z, 5, round_cap=100)
        assert result.found
        assert result.y == 2

    def test_returned_inputs_reproduce_target(self):
        for g in (1, SUCC_INDEX, ADD_TWO_INDEX):
            k = constants_for_base(g).k
            for x in (1, 4, 9):
                result = compile_cu(BASE_V, compiler_index(k, g), x, round_cap=3000)
                assert result.found
                assert result.y is not None
                assert result.target == v_eval(compile_cv(g, x), 3000)
                assert BASE_V.evaluate(result.y, 3000).value == result.target.value
