"""halt-universal - universal functions, halting-set transforms and compilers."""
from __future__ import annotations

from halt_universal.compiler import (
    CompileResult,
    CompilerConstants,
    CompileStatus,
    compile_cu,
    compile_cv,
    compile_phi,
    compiler_index,
    constants_for_base,
)
from halt_universal.enumeration import (
    DomainEnumeration,
    DomainHit,
    enumerate_domain,
    iter_domain,
)
from halt_universal.programmable import (
    ProgrammableEntry,
    ProgrammableReport,
    ProgrammableVerdict,
    check_programmable,
)
from halt_universal.reduction import CeSetSpec, theta, theta_enumerated
from halt_universal.universal import (
    BASE_V,
    PHI_PULLBACK,
    SQUARE_EMBED,
    Evaluable,
    UniversalKind,
    UniversalSpec,
    UniversalSpecError,
    u_mix_eval,
    u_phi_eval,
    u_sq_eval,
    v_eval,
)

__all__ = [
    "BASE_V",
    "CeSetSpec",
    "CompileResult",
    "CompileStatus",
    "CompilerConstants",
    "DomainEnumeration",
    "DomainHit",
    "Evaluable",
    "PHI_PULLBACK",
    "ProgrammableEntry",
    "ProgrammableReport",
    "ProgrammableVerdict",
    "SQUARE_EMBED",
    "UniversalKind",
    "UniversalSpec",
    "UniversalSpecError",
    "check_programmable",
    "compile_cu",
    "compile_cv",
    "compile_phi",
    "compiler_index",
    "constants_for_base",
    "enumerate_domain",
    "iter_domain",
    "theta",
    "theta_enumerated",
    "u_mix_eval",
    "u_phi_eval",
    "u_sq_eval",
    "v_eval",
]
