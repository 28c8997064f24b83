"""halt-density - natural densities and almost-decidability witnesses."""
from __future__ import annotations

from halt_density.density import (
    CSV_COLUMNS,
    DEFAULT_TOL,
    DensityClass,
    DensityMode,
    DensityReport,
    FiberBound,
    classify_report,
    density_exact,
    density_profile,
    fiber_bound,
    halting_density_lower,
)
from halt_density.predicates import (
    PredicateError,
    PredicateRegistry,
    ProgramPredicate,
    default_registry,
    fiber_predicate,
)
from halt_density.witness import (
    Contradiction,
    ContradictionKind,
    RCheckReport,
    Verdict,
    Witness,
    WitnessReport,
    r_decidability_check,
    restrict_off_squares,
    validate_witness,
)

__all__ = [
    "CSV_COLUMNS",
    "Contradiction",
    "DEFAULT_TOL",
    "ContradictionKind",
    "DensityClass",
    "DensityMode",
    "DensityReport",
    "FiberBound",
    "PredicateError",
    "PredicateRegistry",
    "ProgramPredicate",
    "RCheckReport",
    "Verdict",
    "Witness",
    "WitnessReport",
    "classify_report",
    "default_registry",
    "density_exact",
    "density_profile",
    "fiber_bound",
    "fiber_predicate",
    "halting_density_lower",
    "r_decidability_check",
    "restrict_off_squares",
    "validate_witness",
]
