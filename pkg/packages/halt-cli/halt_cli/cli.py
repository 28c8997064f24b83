"""halt-lab command line.

Exit codes: 0 success; 1 refuted witness, failed check or a search that ran
out of rounds; 2 usage error (including unknown names, unreadable or
malformed program files).
"""
from __future__ import annotations

import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

import click

from halt.machine import evaluate, gamma
from halt.numbering import decode_index, encode_program
from halt.program import format_program, parse_program
from halt.sweep import SweepConfig
from halt.types import HaltLabError
from halt_density.density import (
    CSV_COLUMNS,
    DEFAULT_TOL,
    DensityReport,
    classify_report,
    density_exact,
    density_profile,
    halting_density_lower,
)
from halt_density.predicates import default_registry
from halt_density.witness import Verdict, Witness, r_decidability_check, validate_witness
from halt_universal.compiler import CompileStatus, compile_cu, compiler_index
from halt_universal.enumeration import iter_domain
from halt_universal.programmable import check_programmable
from halt_universal.universal import UniversalSpec

from halt_cli.config import FORMATS, ExperimentConfig, ReportFormat
from halt_cli.emit import Report, write_report
from halt_cli.experiments import phi_reduction_report, square_embed_report

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class HaltLabGroup(click.Group):
    """Turns domain errors raised by a subcommand into usage errors (exit 2)."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (HaltLabError, ValueError) as exc:
            raise click.UsageError(str(exc), ctx) from exc


def _fraction(ctx: click.Context, param: click.Parameter, value: str | None) -> Fraction | None:
    if value is None:
        return None
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{value!r} is not a rational number") from None


def _checkpoints(
    ctx: click.Context, param: click.Parameter, value: str | None,
) -> tuple[int, ...] | None:
    if value is None:
        return None
    try:
        marks = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"{value!r} is not a comma-separated list of integers") from None
    if min(marks) < 1:
        raise click.BadParameter("checkpoints must be positive")
    return marks


def _program_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}") from exc


def output_options(default_fmt: ReportFormat) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """``--out`` and ``--format`` for commands that write a report."""

    def decorate(fn: Callable[..., Any]) -> Callable[..., Any]:
        fn = click.option(
            "--format", "fmt", type=click.Choice(FORMATS), default=default_fmt, show_default=True,
        )(fn)
        fn = click.option(
            "--out", type=click.Path(path_type=Path, dir_okay=False), default=None,
            help="Report file; standard output when omitted.",
        )(fn)
        return fn

    return decorate


def _sweep(ctx: click.Context) -> SweepConfig:
    sweep: SweepConfig = ctx.obj["sweep"]
    return sweep


def _finish(code: int) -> None:
    if code:
        click.get_current_context().exit(code)


@click.group(cls=HaltLabGroup)
@click.option("--verbose", "-v", is_flag=True, help="Log progress at DEBUG level.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--chunk-size", type=click.IntRange(min=1), default=4096, show_default=True)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, workers: int, chunk_size: int) -> None:
    """Computability lab: universal functions, halting sets and densities."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT)
    ctx.ensure_object(dict)
    ctx.obj["sweep"] = SweepConfig(chunk_size=chunk_size, workers=workers)
    logger.debug("sweep settings: %s", ctx.obj["sweep"])


# -- programs ---------------------------------------------------------------


@cli.command("eval")
@click.option("--program", "program_path", type=click.Path(path_type=Path, dir_okay=False))
@click.option("--index", type=click.IntRange(min=1), default=None, help="Goedel index instead of a file.")
@click.option("--universal", default=None, help="Evaluate a universal function instead.")
@click.option("--input", "x", type=click.IntRange(min=1), required=True)
@click.option("--budget", type=click.IntRange(min=1), required=True)
def eval_cmd(
    program_path: Path | None, index: int | None, universal: str | None, x: int, budget: int,
) -> None:
    """Run a program, an index or a universal function on one input."""
    chosen = [v for v in (program_path, index, universal) if v is not None]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --program, --index, --universal")
    if program_path is not None:
        outcome = evaluate(parse_program(_program_text(program_path)), x, budget)
    elif index is not None:
        outcome = gamma(index, x, budget)
    else:
        assert universal is not None
        outcome = UniversalSpec.from_name(universal).evaluate(x, budget)
    click.echo(outcome.describe())


@cli.command()
@click.option("--program", "program_path", type=click.Path(path_type=Path, dir_okay=False), required=True)
def encode(program_path: Path) -> None:
    """Print the Goedel index of a program file."""
    click.echo(encode_program(parse_program(_program_text(program_path))))


@cli.command()
@click.option("--index", type=click.IntRange(min=1), required=True)
def decode(index: int) -> None:
    """Print the program with a Goedel index in canonical text."""
    text = format_program(decode_index(index))
    click.echo(text or "# empty program (identity)\n", nl=False)


# -- densities ----------------------------------------------------------------


def _density_report(reports: Sequence[DensityReport], tol: Fraction) -> Report:
    """One row per report; the summary describes the last, with its class label."""
    final = reports[-1]
    summary = {**final.to_dict(), "class": classify_report(final, tol).value, "tol": str(tol)}
    return Report(CSV_COLUMNS, tuple(r.csv_row() for r in reports), summary)


@cli.command()
@click.option("--set", "set_name", required=True, help="Registered predicate, phi-fiber:<n> or <file>.cm")
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option(
    "--checkpoints", callback=_checkpoints, default=None,
    help="Comma-separated N values below --n; adds a row per checkpoint.",
)
@click.option("--tol", callback=_fraction, default=str(DEFAULT_TOL), show_default=True)
@click.option("--predicate-budget", type=click.IntRange(min=1), default=10_000, show_default=True)
@output_options("csv")
@click.pass_context
def density(
    ctx: click.Context, set_name: str, n: int, checkpoints: tuple[int, ...] | None, tol: Fraction,
    predicate_budget: int, out: Path | None, fmt: ReportFormat,
) -> None:
    """Exact density of a decidable set on [1, N]."""
    pred = default_registry(predicate_budget).get(set_name)
    if checkpoints:
        if max(checkpoints) > n:
            raise click.UsageError(f"checkpoints must not exceed --n {n}")
        reports = density_profile(pred, (*checkpoints, n))
    else:
        reports = [density_exact(pred, n, _sweep(ctx))]
    write_report(_density_report(reports, tol), fmt, out)


@cli.command("halting-density")
@click.option("--universal", required=True)
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--budget", type=click.IntRange(min=1), required=True)
@click.option("--tol", callback=_fraction, default=str(DEFAULT_TOL), show_default=True)
@output_options("csv")
@click.pass_context
def halting_density(
    ctx: click.Context, universal: str, n: int, budget: int, tol: Fraction,
    out: Path | None, fmt: ReportFormat,
) -> None:
    """Lower bound on the density of a halting set on [1, N]."""
    report = halting_density_lower(UniversalSpec.from_name(universal), n, budget, _sweep(ctx))
    write_report(_density_report([report], tol), fmt, out)


# -- witnesses ----------------------------------------------------------------


def _witness(r: str, d: str, claimed: Fraction | None, predicate_budget: int) -> Witness:
    registry = default_registry(predicate_budget)
    r_pred, d_pred = registry.get(r), registry.get(d)
    return Witness(r_pred, d_pred, claimed if claimed is not None else Fraction(1))


@cli.command()
@click.option("--universal", required=True)
@click.option("--r", "r_set", required=True, help="The generic decidable set R.")
@click.option("--d", "d_set", required=True, help="Claimed decider of R & Halt(U).")
@click.option("--claimed-density", callback=_fraction, default=None)
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--budget", type=click.IntRange(min=1), required=True)
@click.option("--predicate-budget", type=click.IntRange(min=1), default=10_000, show_default=True)
@output_options("json")
@click.pass_context
def witness(
    ctx: click.Context, universal: str, r_set: str, d_set: str, claimed_density: Fraction | None,
    n: int, budget: int, predicate_budget: int, out: Path | None, fmt: ReportFormat,
) -> None:
    """Try to refute an almost-decidability witness on [1, N]."""
    w = _witness(r_set, d_set, claimed_density, predicate_budget)
    report = validate_witness(UniversalSpec.from_name(universal), w, n, budget, _sweep(ctx))
    rows = tuple((c.x, c.kind.value) for c in report.contradictions)
    write_report(Report(("x", "kind"), rows, report.to_dict()), fmt, out)
    _finish(1 if report.verdict is Verdict.REFUTED else 0)


@cli.command("r-check")
@click.option("--universal", required=True)
@click.option("--r", "r_set", required=True)
@click.option("--d", "d_set", required=True)
@click.option("--ratio", callback=_fraction, required=True, help="Target density r of R.")
@click.option("--tol", callback=_fraction, default="0", show_default=True)
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--budget", type=click.IntRange(min=1), required=True)
@click.option("--predicate-budget", type=click.IntRange(min=1), default=10_000, show_default=True)
@output_options("json")
@click.pass_context
def r_check(
    ctx: click.Context, universal: str, r_set: str, d_set: str, ratio: Fraction, tol: Fraction,
    n: int, budget: int, predicate_budget: int, out: Path | None, fmt: ReportFormat,
) -> None:
    """Witness sweep plus the finite check |p_N(R) - r| <= tol."""
    w = _witness(r_set, d_set, None, predicate_budget)
    report = r_decidability_check(
        UniversalSpec.from_name(universal), w, ratio, n, budget, tol, _sweep(ctx),
    )
    rows = tuple((c.x, c.kind.value) for c in report.witness.contradictions)
    write_report(Report(("x", "kind"), rows, report.to_dict()), fmt, out)
    _finish(0 if report.passed else 1)


# -- compilers and enumeration --------------------------------------------------


@cli.command("compile-cu")
@click.option("--universal", required=True)
@click.option("--g", type=click.IntRange(min=1), required=True, help="Goedel index of F.")
@click.option("--k", type=click.IntRange(min=1), required=True)
@click.option("--x", type=click.IntRange(min=1), required=True)
@click.option("--rounds", type=click.IntRange(min=1), required=True)
@output_options("csv")
def compile_cu_cmd(
    universal: str, g: int, k: int, x: int, rounds: int, out: Path | None, fmt: ReportFormat,
) -> None:
    """Search E for y <= k*x with U(y) = V(interleave(g, x))."""
    z = compiler_index(k, g)
    result = compile_cu(UniversalSpec.from_name(universal), z, x, rounds)
    row = (z, x, result.status.value, result.y, result.target.value, result.bound)
    write_report(Report(("z", "x", "status", "y", "target", "bound"), (row,)), fmt, out)
    _finish(0 if result.status is CompileStatus.FOUND else 1)


@cli.command("check-programmable")
@click.option("--universal", required=True)
@click.option("--g", type=click.IntRange(min=1), required=True)
@click.option("--k", type=click.IntRange(min=1), required=True)
@click.option("--n", type=click.IntRange(min=1), required=True, help="Check x = 1..N.")
@click.option("--budget", type=click.IntRange(min=1), required=True)
@output_options("csv")
def programmable_cmd(
    universal: str, g: int, k: int, n: int, budget: int, out: Path | None, fmt: ReportFormat,
) -> None:
    """Look for witnesses y <= k*x with U(y) = F(x) for x = 1..N."""
    report = check_programmable(UniversalSpec.from_name(universal), g, k, range(1, n + 1), budget)
    rows = tuple((e.x, e.verdict.value, e.target, e.witness) for e in report.entries)
    summary = {"k": k, "budget": budget, "all_witnessed": report.all_witnessed}
    write_report(Report(("x", "verdict", "target", "witness"), rows, summary), fmt, out)


@cli.command("enumerate-domain")
@click.option("--universal", required=True)
@click.option("--count", type=click.IntRange(min=1), required=True)
@click.option("--rounds", type=click.IntRange(min=1), required=True)
@output_options("csv")
def enumerate_cmd(
    universal: str, count: int, rounds: int, out: Path | None, fmt: ReportFormat,
) -> None:
    """The first members of the dovetailed enumeration of Halt(U)."""
    rows: list[tuple[object, ...]] = []
    for i, hit in enumerate(iter_domain(UniversalSpec.from_name(universal), rounds), start=1):
        rows.append((i, hit.x, hit.round, hit.outcome.value, hit.outcome.steps_used))
        if i == count:
            break
    exhausted = len(rows) < count
    if exhausted:
        logger.info("enumeration found %d of %d members in %d rounds", len(rows), count, rounds)
    summary = {"requested": count, "found": len(rows), "rounds": rounds, "exhausted": exhausted}
    write_report(Report(("i", "x", "round", "value", "steps"), tuple(rows), summary), fmt, out)
    _finish(1 if exhausted else 0)


# -- experiments --------------------------------------------------------------


@cli.group(cls=HaltLabGroup)
def experiment() -> None:
    """End-to-end experiments."""


@experiment.command("phi-reduction")
@click.option("--n", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--budget", type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--seed", type=int, default=None)
@output_options("csv")
@click.pass_context
def phi_reduction(
    ctx: click.Context, n: int, budget: int, samples: int, seed: int | None,
    out: Path | None, fmt: ReportFormat,
) -> None:
    """n in Halt(V) iff theta(n) in S & Halt(U_phi), on budget-halting samples."""
    config = ExperimentConfig("base_v", n, budget, out, fmt, seed, _sweep(ctx))
    report = phi_reduction_report(config, samples)
    write_report(report, fmt, out)
    summary = report.summary
    click.echo(f"{summary['matches']}/{summary['samples']} matches", err=True)
    _finish(0 if summary["all_match"] else 1)


@experiment.command("square-embed")
@click.option("--n", type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option("--budget", type=click.IntRange(min=1), default=100, show_default=True)
@output_options("csv")
@click.pass_context
def square_embed(ctx: click.Context, n: int, budget: int, out: Path | None, fmt: ReportFormat) -> None:
    """Halting lower bound and non-square witness for the square embedding."""
    config = ExperimentConfig("square_embed", n, budget, out, fmt, None, _sweep(ctx))
    report, refuted = square_embed_report(config)
    write_report(report, fmt, out)
    _finish(1 if refuted else 0)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        args = list(argv) if argv is not None else None
        rv = cli.main(args=args, prog_name="halt-lab", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def run() -> None:
    sys.exit(main())
