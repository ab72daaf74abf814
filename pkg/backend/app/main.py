import logging
import time
from typing import Callable, Optional

import typer
from rich.table import Table

from .commands.axioms import run_axioms
from .commands.check import run_check
from .commands.double import run_double
from .commands.dual import run_dual
from .commands.scan import run_scan
from .config import get_settings
from .exceptions import InternalDisagreement, InvalidInput, NotAParameterTuple
from .logging_setup import configure_logging, stderr_console
from .models.reports import Report, raw_params

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

# negative parameters such as `check 8 1 2 1 -2` must not be read as options
TUPLE_COMMAND = {"ignore_unknown_options": True}

app = typer.Typer(
    name="gta-hopf",
    help="Exact checks on generalised Taft algebras: axioms, duals, pairs in involution, doubles.",
    no_args_is_help=True,
    add_completion=False,
)


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, "--log-level", help="Overrides GTA_LOG_LEVEL.")):
    configure_logging((log_level or get_settings().log_level).upper())


def _summary(report: Report) -> Table:
    table = Table(title=f"{report.command}: {'passed' if report.passed else 'FAILED'}")
    table.add_column("verdict")
    table.add_column("value")
    for key in sorted(report.verdicts):
        value = report.verdicts[key]
        if isinstance(value, dict) and "passed" in value:
            value = "ok" if value["passed"] else f"FAILED ({value['witness']})"
        elif isinstance(value, (list, dict)) and len(str(value)) > 80:
            value = f"{type(value).__name__} of {len(value)}"
        table.add_row(key, str(value))
    return table


def _emit(command: str, build: Callable[[], Report], params: Optional[dict], json_only: bool, timing: bool) -> None:
    """Run a report builder, print JSON to stdout and exit with the matching code."""
    started = time.perf_counter()
    try:
        report = build()
        code = EXIT_OK if report.passed else EXIT_FAILED
    except InvalidInput as exc:
        report = Report(command=command, passed=False, params=params, verdicts={"valid": False})
        if isinstance(exc, NotAParameterTuple):
            report.verdicts["condition"] = exc.condition
        report.witnesses.append(str(exc))
        code = EXIT_INVALID
    except InternalDisagreement as exc:
        logger.error(f"{command}: {exc}")
        report = Report(command=command, passed=False, params=params)
        report.witnesses.append(f"{exc} (witness: {exc.witness})")
        code = EXIT_FAILED

    if timing:
        report.timing = round(time.perf_counter() - started, 3)
    typer.echo(report.to_json())
    if not json_only:
        stderr_console.print(_summary(report))
        for witness in report.witnesses:
            stderr_console.print(f"[red]witness:[/red] {witness}")
    raise typer.Exit(code=code)


@app.command(context_settings=TUPLE_COMMAND)
def check(
    order: int, a1: int, a2: int, b1: int, b2: int,
    verify_certificates: bool = typer.Option(False, "--verify-certificates", help="Re-check every certificate on the full basis."),
    json_only: bool = typer.Option(False, "--json-only"),
    timing: bool = typer.Option(False, "--timing"),
):
    """Validity, distinguished group-likes, classifier and certificates for one tuple."""
    _emit(
        "check",
        lambda: run_check(order, a1, a2, b1, b2, verify_certificates=verify_certificates),
        raw_params(order, a1, a2, b1, b2),
        json_only,
        timing,
    )


@app.command()
def scan(
    max_n: int = typer.Argument(..., help="Largest order N to scan."),
    mode: str = typer.Option("exhaustive", "--mode", help="exhaustive or sampled."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    sample_size: Optional[int] = typer.Option(None, "--sample-size"),
    min_n: int = typer.Option(2, "--min-n"),
    parallelism: Optional[int] = typer.Option(None, "--parallelism"),
    progress: bool = typer.Option(False, "--progress/--no-progress"),
    json_only: bool = typer.Option(False, "--json-only"),
    timing: bool = typer.Option(False, "--timing"),
):
    """Classifier against the brute-force oracle for every order up to MAX_N."""
    settings = get_settings()
    _emit(
        "scan",
        lambda: run_scan(
            max_n,
            mode=mode,
            seed=settings.seed if seed is None else seed,
            sample_size=sample_size or settings.sample_size,
            exhaustive_max_n=settings.exhaustive_max_n,
            parallelism=parallelism or settings.parallelism,
            progress=progress,
            min_n=min_n,
        ),
        None,
        json_only,
        timing,
    )


@app.command(context_settings=TUPLE_COMMAND)
def axioms(
    order: int, a1: int, a2: int, b1: int, b2: int,
    scope: str = typer.Option("exhaustive", "--scope", help="exhaustive or sampled."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    sample_size: Optional[int] = typer.Option(None, "--sample-size"),
    radford: bool = typer.Option(True, "--radford/--no-radford"),
    json_only: bool = typer.Option(False, "--json-only"),
    timing: bool = typer.Option(False, "--timing"),
):
    """Hopf axioms, integral and S^4 for one tuple."""
    settings = get_settings()
    _emit(
        "axioms",
        lambda: run_axioms(
            order, a1, a2, b1, b2,
            scope=scope,
            seed=settings.seed if seed is None else seed,
            sample_size=sample_size or settings.axiom_sample_size,
            radford=radford,
        ),
        raw_params(order, a1, a2, b1, b2),
        json_only,
        timing,
    )


@app.command(context_settings=TUPLE_COMMAND)
def dual(
    order: int, a1: int, a2: int, b1: int, b2: int,
    json_only: bool = typer.Option(False, "--json-only"),
    timing: bool = typer.Option(False, "--timing"),
):
    """Present the dual as H(b1, b2, a1, a2) and check its relations."""
    _emit("dual", lambda: run_dual(order, a1, a2, b1, b2), raw_params(order, a1, a2, b1, b2), json_only, timing)


@app.command(context_settings=TUPLE_COMMAND)
def double(
    order: int, a1: int, a2: int, b1: int, b2: int,
    max_n: Optional[int] = typer.Option(None, "--max-n", help="Allow doubles of algebras with dim H <= max_n^3 (default GTA_DOUBLE_MAX_N)."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    triples: Optional[int] = typer.Option(None, "--triples"),
    json_only: bool = typer.Option(False, "--json-only"),
    timing: bool = typer.Option(False, "--timing"),
):
    """Drinfeld and anti-Drinfeld doubles and the isomorphism between them."""
    settings = get_settings()
    _emit(
        "double",
        lambda: run_double(
            order, a1, a2, b1, b2,
            max_n=max_n or settings.double_max_n,
            seed=settings.seed if seed is None else seed,
            triples=triples or settings.associativity_triples,
        ),
        raw_params(order, a1, a2, b1, b2),
        json_only,
        timing,
    )


if __name__ == "__main__":
    app()
