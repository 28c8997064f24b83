"""End-to-end experiments: the phi-pullback reduction and the square embedding."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from halt.encodings import is_square, phi, phi_fiber
from halt.types import SearchCapError, require_positive
from halt_density.density import (
    CSV_COLUMNS,
    DEFAULT_TOL,
    classify_report,
    density_exact,
    halting_density_lower,
)
from halt_density.witness import Verdict, Witness, validate_witness
from halt_universal.reduction import theta
from halt_universal.universal import BASE_V, PHI_PULLBACK, UniversalSpec

from halt_cli.config import ExperimentConfig
from halt_cli.emit import Report

logger = logging.getLogger(__name__)

PHI_REDUCTION_COLUMNS = (
    "n", "theta", "phi_theta", "in_s",
    "v_value", "v_steps", "u_value", "u_steps", "match", "error",
)


def _non_square(x: int) -> bool:
    return not is_square(x)


@dataclass(frozen=True)
class PhiReductionRow:
    n: int
    theta: int | None
    phi_theta: int | None
    in_s: bool
    v_value: int | None
    v_steps: int
    u_value: int | None
    u_steps: int | None
    match: bool
    error: str = ""

    def as_tuple(self) -> tuple[object, ...]:
        return (
            self.n, self.theta, self.phi_theta, self.in_s,
            self.v_value, self.v_steps, self.u_value, self.u_steps, self.match, self.error,
        )


def _candidates(limit: int, seed: int | None) -> list[int]:
    order = list(range(1, limit + 1))
    if seed is not None:
        random.Random(seed).shuffle(order)
    return order


def phi_reduction_rows(
    config: ExperimentConfig, sample_count: int, fiber_span: int = 64,
) -> list[PhiReductionRow]:
    """Check ``n in Halt(V) iff theta(n) in S & Halt(U_phi)`` on halting samples.

    S is the non-squares. Samples are the first ``sample_count`` inputs
    ``n <= config.n`` (ascending, or shuffled by ``config.seed``) on which
    V halts within the budget. ``theta`` searches the first
    ``fiber_span + 1`` fiber elements; running out is recorded on the row.
    """
    require_positive("sample_count", sample_count)
    if config.spec() != BASE_V:
        raise ValueError(f"phi-reduction runs on base_v, got {config.universal!r}")
    v = BASE_V
    rows: list[PhiReductionRow] = []
    for n in _candidates(config.n, config.seed):
        if len(rows) == sample_count:
            break
        target = v.evaluate(n, config.budget)
        if not target.is_halted:
            continue
        try:
            k = theta(_non_square, n, phi_fiber(n, fiber_span))
        except SearchCapError as exc:
            logger.info("theta(%d): %s", n, exc)
            rows.append(PhiReductionRow(
                n, None, None, False, target.value, target.steps_used, None, None, False,
                "cap-exceeded",
            ))
            continue
        pulled = PHI_PULLBACK.evaluate(k, config.budget)
        rows.append(PhiReductionRow(
            n=n,
            theta=k,
            phi_theta=phi(k),
            in_s=_non_square(k),
            v_value=target.value,
            v_steps=target.steps_used,
            u_value=pulled.value,
            u_steps=pulled.steps_used,
            match=phi(k) == n and _non_square(k) and pulled == target,
        ))
    if len(rows) < sample_count:
        logger.info("found %d of %d halting samples below %d", len(rows), sample_count, config.n)
    return rows


def phi_reduction_report(config: ExperimentConfig, sample_count: int) -> Report:
    rows = phi_reduction_rows(config, sample_count)
    matches = sum(1 for row in rows if row.match)
    return Report(
        columns=PHI_REDUCTION_COLUMNS,
        rows=tuple(row.as_tuple() for row in rows),
        summary={
            "experiment": "phi-reduction",
            "range": [1, config.n],
            "budget": config.budget,
            "requested": sample_count,
            "samples": len(rows),
            "matches": matches,
            "all_match": matches == len(rows),
        },
    )


def square_embed_report(
    config: ExperimentConfig, tol: Fraction = DEFAULT_TOL,
) -> tuple[Report, bool]:
    """Halting lower bound, non-square witness sweep and exact non-square density.

    Both densities carry a finite-N class label at tolerance ``tol``.
    Returns the report and whether the witness was refuted.
    """
    u = UniversalSpec.square_embed()
    lower = halting_density_lower(u, config.n, config.budget, config.sweep)
    exact = density_exact(_non_square, config.n, config.sweep)
    witness = validate_witness(
        u, Witness(_non_square, _non_square), config.n, config.budget, config.sweep,
    )
    refuted = witness.verdict is Verdict.REFUTED
    report = Report(
        columns=("quantity", *CSV_COLUMNS),
        rows=(
            ("halting_lower_bound", *lower.csv_row()),
            ("nonsquares_exact", *exact.csv_row()),
        ),
        summary={
            "experiment": "square-embed",
            "lower_bound_dominates": lower.density >= exact.density,
            "lower_bound_class": classify_report(lower, tol).value,
            "nonsquares_class": classify_report(exact, tol).value,
            "tol": str(tol),
            "witness": witness.to_dict(),
        },
    )
    return report, refuted
