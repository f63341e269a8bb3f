"""Command-line interface for specht-sym."""

import asyncio
import functools
from collections.abc import Callable
from math import comb
from typing import Any, NoReturn

import click
from loguru import logger
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from specht_sym.acceptance import CRITERIA, run_acceptance
from specht_sym.config import Settings, configure_logging, load_settings
from specht_sym.modact import ModuleError
from specht_sym.models import (
    AcceptanceSummary,
    CheckResult,
    DecompositionReport,
    ModuleKind,
    VerificationReport,
    VerifyTarget,
    render_template,
)
from specht_sym.repring import (
    RepRingElement,
    dimension,
    expected_dimension,
    kostka_positivity_report,
    specht_filtration_report,
    sym_D_formula,
    sym_M_formula,
    sym_S_formula,
    to_young_basis,
)
from specht_sym.spechtmod import natural_module, specht_n11
from specht_sym.splitters import Split, SplittingError, gamma, split_chain_M, split_chain_S, zeta
from specht_sym.symalg import CommutatorCase, NotScalarError, SymContext, commutator_scalars
from specht_sym.vertexcalc import sd_vertex_report

console = Console(stderr=True)

EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


def _fail(e: Exception, code: int) -> NoReturn:
    console.print(f"[red]{type(e).__name__}: {e}[/red]", markup=True, highlight=False)
    for note in getattr(e, "__notes__", []):
        console.print(f"[dim]  {note}[/dim]", highlight=False)
    raise SystemExit(code)


def handle_errors(command: Callable[..., None]) -> Callable[..., None]:
    """Map domain exceptions to exit codes: bad input 2, failed identity 1."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:  # noqa: ANN401
        try:
            command(*args, **kwargs)
        except ValueError as e:
            _fail(e, EXIT_BAD_INPUT)
        except (ModuleError, SplittingError, NotScalarError) as e:
            _fail(e, EXIT_FAILED)

    return wrapper


def emit(report: BaseModel, template_name: str) -> None:
    """Print a report as JSON or through its text template."""
    if click.get_current_context().obj["json"]:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(render_template(template_name, report=report).rstrip())


def _settings(n: int | None, p: int | None) -> Settings:
    """The group settings with -n and -p applied and validated."""
    settings: Settings = click.get_current_context().obj["settings"]
    overrides = {key: value for key, value in (("n", n), ("p", p)) if value is not None}
    return Settings.model_validate(settings.model_dump() | overrides)


n_option = click.option("-n", "n", type=int, default=None, help="Symmetric group index (default 10)")
p_option = click.option("-p", "p", type=int, default=None, help="Field characteristic (default 5)")
kind_option = click.option(
    "-m",
    "--module",
    "kind",
    type=click.Choice([k.value for k in ModuleKind]),
    default=ModuleKind.D.value,
    help="M^(n-1,1), S^(n-1,1) or D^(n-1,1)",
)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log every step at DEBUG")
@click.option("--json", "as_json", is_flag=True, help="Print machine-readable JSON")
@click.option("--cap", type=int, default=None, help="Degree cap for verify commutator (default p + 1)")
@click.pass_context
def main(ctx: click.Context, verbose: bool, as_json: bool, cap: int | None) -> None:  # noqa: FBT001
    """Exact GF(p) computations with symmetric powers of S_n modules."""
    settings = load_settings()
    overrides: dict[str, Any] = {"log_level": "DEBUG"} if verbose else {}
    if cap is not None:
        overrides["cap"] = cap
    settings = Settings.model_validate(settings.model_dump() | overrides)
    configure_logging(settings.log_level)
    ctx.obj = {"settings": settings, "json": as_json}


def _formula(kind: ModuleKind, n: int, r: int, p: int) -> RepRingElement:
    if kind is ModuleKind.M:
        return sym_M_formula(n, r)
    if kind is ModuleKind.S:
        return sym_S_formula(n, r, p)
    return sym_D_formula(n, r, p)


@main.command()
@n_option
@p_option
@click.option("-r", "r", type=int, required=True, help="Symmetric power degree")
@kind_option
@handle_errors
def decompose(n: int | None, p: int | None, r: int, kind: str) -> None:
    """[Sym^r X] in the M basis and, where known, the Young basis."""
    settings = _settings(n, p)
    module = ModuleKind(kind)
    formula = _formula(module, settings.n, r, settings.p)
    converted, remainder = to_young_basis(formula, settings.p)
    logger.debug(f"Young conversion leaves {len(remainder.terms)} M terms")
    report = DecompositionReport(
        n=settings.n,
        p=settings.p,
        r=r,
        module=module,
        formula=formula.to_text(),
        young=converted.to_text() if not converted.is_zero() else None,
        remainder=remainder.to_text() if not remainder.is_zero() else None,
        dimension=dimension(formula, settings.p),
        expected_dimension=expected_dimension(module, settings.n, r),
    )
    emit(report, "decompose.j2")


def _split_checks(build: Callable[[], list[Split]], what: Callable[[Split], str]) -> list[CheckResult]:
    """One check per produced split; a failing split ends the chain."""
    try:
        splits = build()
    except SplittingError as e:
        return [CheckResult(name="chain", passed=False, detail=str(e))]
    return [
        CheckResult(name=what(s), passed=True, detail=f"{s.hom.matrix.shape[0]}x{s.hom.matrix.shape[1]}, equivariant")
        for s in splits
    ]


def _section_name(split: Split) -> str:
    return f"d_{split.r} o theta_{split.r} = id"


def _retraction_name(split: Split) -> str:
    return f"theta_{split.r} o X_{split.r - 1} = id"


def _commutator_checks(ctx: SymContext, splits: list[Split]) -> list[CheckResult]:
    p = ctx.p
    degrees = list(range(1, min(p, ctx.cap - 1) + 1))
    checks = []
    for split in splits:
        try:
            scalars = commutator_scalars(ctx, split.hom, split.r, degrees, split.case)
        except NotScalarError as e:
            checks.append(CheckResult(name=f"{split.case.value} r={split.r}", passed=False, detail=str(e)))
            continue
        for d, scalar in scalars.items():
            expected = comb(d, split.r - 1) % p
            checks.append(
                CheckResult(
                    name=f"{split.case.value} r={split.r} on Sym^{d}",
                    passed=scalar == expected,
                    detail=f"scalar {scalar}, C({d},{split.r - 1}) = {expected}",
                )
            )
    return checks


def verification_checks(target: VerifyTarget, n: int, p: int, cap: int) -> list[CheckResult]:
    """Run the constructions behind one verify target and itemize the identities."""
    if target is VerifyTarget.ZETA:
        ctx = SymContext(natural_module(n, p), cap=2)
        return _split_checks(lambda: [Split(r=2, case=CommutatorCase.SECTION, hom=zeta(ctx))], _section_name)
    if target is VerifyTarget.GAMMA:
        specht, _ = specht_n11(n, p)
        ctx = SymContext(specht, cap=3)
        return _split_checks(lambda: [Split(r=3, case=CommutatorCase.RETRACTION, hom=gamma(n, p, ctx))], _retraction_name)
    if target is VerifyTarget.CHAIN_M:
        return _split_checks(lambda: split_chain_M(n, p), _section_name)
    if target is VerifyTarget.CHAIN_S:
        return _split_checks(lambda: split_chain_S(n, p), _retraction_name)
    ctx = SymContext(natural_module(n, p), cap=cap)
    checks = _commutator_checks(ctx, split_chain_M(n, p, ctx))
    if n % p == 0 and p >= 5:  # noqa: PLR2004
        specht, _ = specht_n11(n, p)
        specht_ctx = SymContext(specht, cap=cap)
        checks += _commutator_checks(specht_ctx, split_chain_S(n, p, specht_ctx))
    return checks


@main.command()
@n_option
@p_option
@click.argument("target", type=click.Choice([t.value for t in VerifyTarget]))
@handle_errors
def verify(n: int | None, p: int | None, target: str) -> None:
    """Check the exact identities of zeta, gamma, both chains or the commutators."""
    settings = _settings(n, p)
    checks = verification_checks(VerifyTarget(target), settings.n, settings.p, settings.degree_cap)
    report = VerificationReport(n=settings.n, p=settings.p, target=VerifyTarget(target), checks=checks)
    emit(report, "verify.j2")
    if not report.passed:
        raise SystemExit(EXIT_FAILED)


@main.command()
@n_option
@p_option
@click.option("-r", "r", type=int, required=True, help="Symmetric power degree")
@kind_option
@handle_errors
def vertex(n: int | None, p: int | None, r: int, kind: str) -> None:
    """Vertices of the Young summands of Sym^r S or Sym^r D."""
    settings = _settings(n, p)
    emit(sd_vertex_report(settings.n, settings.p, ModuleKind(kind), r), "vertex.j2")


@main.command()
@n_option
@p_option
@handle_errors
def kostka(n: int | None, p: int | None) -> None:
    """Positive p-Kostka numbers [M^(n-3,2,1) : Y^mu] read off [Sym^4 D]."""
    settings = _settings(n, p)
    emit(kostka_positivity_report(settings.n, settings.p), "kostka.j2")


@main.command()
@n_option
@p_option
@click.option("-r", "r", type=int, required=True, help="Symmetric power degree")
@kind_option
@handle_errors
def filtration(n: int | None, p: int | None, r: int, kind: str) -> None:
    """Which modules Sym^r S or Sym^r D is assembled from."""
    settings = _settings(n, p)
    emit(specht_filtration_report(settings.n, settings.p, ModuleKind(kind), r), "filtration.j2")


def _print_table(summary: AcceptanceSummary, timings: bool) -> None:  # noqa: FBT001
    table = Table(title="Acceptance")
    table.add_column("#", justify="right")
    table.add_column("Criterion")
    table.add_column("Status")
    table.add_column("Detail", overflow="fold")
    if timings:
        table.add_column("Seconds", justify="right")
    for result in summary.results:
        row = [
            str(result.criterion),
            result.title,
            "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]",
            result.detail,
        ]
        if timings:
            row.append(f"{result.elapsed:.2f}")
        table.add_row(*row)
    Console().print(table)


@main.command()
@click.option("-c", "--criterion", "criteria", type=int, multiple=True, help="Run only these criteria")
@click.option("--timings", is_flag=True, help="Show elapsed seconds per criterion")
@handle_errors
def accept(criteria: tuple[int, ...], timings: bool) -> None:  # noqa: FBT001
    """Run the acceptance suite; exit 0 only if every criterion passes."""
    obj = click.get_current_context().obj
    summary = asyncio.run(run_acceptance(obj["settings"], list(criteria) or sorted(CRITERIA)))
    if not timings:
        summary = summary.model_copy(
            update={"results": [r.model_copy(update={"elapsed": None}) for r in summary.results]}
        )
    if obj["json"]:
        click.echo(summary.model_dump_json(indent=2))
    else:
        _print_table(summary, timings)
    if not summary.passed:
        raise SystemExit(EXIT_FAILED)


if __name__ == "__main__":
    main()
