"""Command-line front end for the interlacing and realization toolkit.

JSON results go to stdout; progress, tables and errors go to stderr.
Exit codes: 0 success, 1 negative result, 2 input error, 3 numerical failure.
"""

import json
from collections.abc import Callable
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from weyl_forge.core.config import Settings, ToleranceProfile, get_settings
from weyl_forge.core.exceptions import (
    DomainError,
    InputValidationError,
    NumericalError,
)
from weyl_forge.core.logging import configure_logging
from weyl_forge.polynomials.generators import DEFAULT_MIN_GAP, gen_pq_pair
from weyl_forge.polynomials.interlacing import (
    interlace_report,
    minimal_pq,
    split,
    split_degree_window,
)
from weyl_forge.realize.certificates import Realization
from weyl_forge.realize.chains import realize_bordered, realize_weyl_converse
from weyl_forge.storage.models import (
    InterlaceReportModel,
    PairModel,
    PolyModel,
    VerifyReportModel,
)
from weyl_forge.storage.repository import CertificateRepository, dumps
from weyl_forge.verify.checks import VerifyReport
from weyl_forge.verify.engine import check_bordered, check_realization
from weyl_forge.verify.properties import run_property_suite

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

app = typer.Typer(help="weyl-forge - (p,q)-interlacing and Weyl converse certificates")
console = Console(stderr=True)

EqTol = typer.Option(None, "--eq-tol", help="Root equality tolerance")
ZeroTol = typer.Option(None, "--zero-tol", help="Inertia zero band")
SpectrumTol = typer.Option(None, "--spectrum-tol", help="Spectrum match tolerance")
DecompTol = typer.Option(None, "--decomp-tol", help="Decomposition tolerance")


def _setup() -> Settings:
    settings = get_settings()
    configure_logging(settings.log_level, settings.log_format)
    return settings


def _tolerances(settings: Settings, **overrides: float | None) -> ToleranceProfile:
    """Settings tolerances with the command-line overrides applied."""
    update = {k: v for k, v in overrides.items() if v is not None}
    try:
        return ToleranceProfile.model_validate(
            {**settings.tolerances.model_dump(), **update}
        )
    except ValidationError as e:
        raise InputValidationError(
            "Tolerance overrides must be positive", details={"error": str(e)}
        ) from e


def _run(action: Callable[[], int]) -> None:
    """Run a command body and turn its outcome into an exit code."""
    try:
        code = action()
    except (InputValidationError, DomainError) as e:
        console.print(f"[red]Error: {e.message}[/red]")
        code = EXIT_INPUT
    except NumericalError as e:
        console.print(f"[red]Numerical failure: {e.message}[/red]")
        if e.details:
            console.print(f"[dim]{e.details}[/dim]")
        code = EXIT_NUMERICAL
    raise typer.Exit(code)


def _print_checks(report: VerifyReport, title: str) -> None:
    table = Table(title=title)
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Residual", justify="right")
    table.add_column("Threshold", justify="right")
    for c in report.checks:
        verdict = "[green]pass[/green]" if c.passed else "[red]FAIL[/red]"
        table.add_row(c.name, verdict, f"{c.residual:.3e}", f"{c.threshold:.3e}")
    console.print(table)


@app.command()
def check(
    f_path: Path = typer.Argument(..., help="Polynomial f (JSON)"),
    g_path: Path = typer.Argument(..., help="Polynomial g (JSON)"),
    p: int = typer.Option(..., "--p", help="Lower shift p"),
    q: int = typer.Option(..., "--q", help="Upper shift q"),
) -> None:
    """Test whether f (p,q)-interlaces g."""

    def body() -> int:
        _setup()
        repo = CertificateRepository()
        f, g = repo.load_poly(f_path), repo.load_poly(g_path)
        if p < 0 or q < 0:
            raise InputValidationError("--p and --q must be nonnegative")
        report = interlace_report(f, g, p, q)
        typer.echo(dumps(InterlaceReportModel.from_report(report)), nl=False)
        return EXIT_OK if report.holds else EXIT_NEGATIVE

    _run(body)


@app.command()
def minimal(
    f_path: Path = typer.Argument(..., help="Polynomial f (JSON)"),
    g_path: Path = typer.Argument(..., help="Polynomial g (JSON)"),
) -> None:
    """Print the least (p, q) with f (p,q)-interlacing g."""

    def body() -> int:
        _setup()
        repo = CertificateRepository()
        p, q = minimal_pq(repo.load_poly(f_path), repo.load_poly(g_path))
        typer.echo(json.dumps({"p": p, "q": q}))
        return EXIT_OK

    _run(body)


@app.command("split")
def split_command(
    f_path: Path = typer.Argument(..., help="Polynomial f (JSON)"),
    g_path: Path = typer.Argument(..., help="Polynomial g (JSON)"),
    p: int = typer.Option(..., "--p"),
    q: int = typer.Option(..., "--q"),
    s: int = typer.Option(..., "--s"),
    t: int = typer.Option(..., "--t"),
    d: Optional[int] = typer.Option(
        None, "--d", help="Degree of h; smallest admissible when omitted"
    ),
    out: Path = typer.Option(Path("h.json"), "--out", "-o", help="Output file"),
) -> None:
    """Write h with f (s,t)-interlacing h and h (p-s,q-t)-interlacing g."""

    def body() -> int:
        _setup()
        repo = CertificateRepository()
        f, g = repo.load_poly(f_path), repo.load_poly(g_path)
        degree = split_degree_window(f, g, p, q, s, t)[0] if d is None else d
        h = split(f, g, p, q, s, t, degree)
        repo.save_poly(out, h)
        typer.echo(dumps(PolyModel.from_poly(h)), nl=False)
        console.print(f"[green]Wrote {out}[/green]")
        return EXIT_OK

    _run(body)


@app.command()
def realize(
    f_path: Path = typer.Argument(..., help="Polynomial f (JSON)"),
    g_path: Path = typer.Argument(..., help="Polynomial g (JSON)"),
    p: int = typer.Option(..., "--p"),
    q: int = typer.Option(..., "--q"),
    out: Path = typer.Option(Path("realization.json"), "--out", "-o"),
    force: bool = typer.Option(False, "--force", help="Write even if checks fail"),
    eq_tol: Optional[float] = EqTol,
    zero_tol: Optional[float] = ZeroTol,
    spectrum_tol: Optional[float] = SpectrumTol,
    decomp_tol: Optional[float] = DecompTol,
) -> None:
    """Build A in H(f), B in H(g) with n+(B-A) <= p and n-(B-A) <= q."""

    def body() -> int:
        settings = _setup()
        tol = _tolerances(
            settings,
            eq_tol=eq_tol,
            zero_tol=zero_tol,
            spectrum_tol=spectrum_tol,
            decomp_tol=decomp_tol,
        )
        repo = CertificateRepository()
        f, g = repo.load_poly(f_path), repo.load_poly(g_path)
        r = realize_weyl_converse(f, g, p, q, tol)
        report = check_realization(r, tol=tol)
        return _emit(
            report, "Realization checks", force, lambda: repo.save_realization(out, r)
        )

    _run(body)


@app.command()
def border(
    f_path: Path = typer.Argument(..., help="Polynomial f (JSON)"),
    g_path: Path = typer.Argument(..., help="Polynomial g (JSON)"),
    out: Path = typer.Option(Path("bordered.json"), "--out", "-o"),
    force: bool = typer.Option(False, "--force", help="Write even if checks fail"),
    eq_tol: Optional[float] = EqTol,
    spectrum_tol: Optional[float] = SpectrumTol,
) -> None:
    """Build M in H(g) whose leading block is diag(roots of f)."""

    def body() -> int:
        settings = _setup()
        tol = _tolerances(settings, eq_tol=eq_tol, spectrum_tol=spectrum_tol)
        repo = CertificateRepository()
        f, g = repo.load_poly(f_path), repo.load_poly(g_path)
        r = realize_bordered(f, g, tol)
        report = check_bordered(r, tol)
        return _emit(
            report, "Bordered checks", force, lambda: repo.save_bordered(out, r)
        )

    _run(body)


def _emit(
    report: VerifyReport, title: str, force: bool, save: Callable[[], Path]
) -> int:
    _print_checks(report, title)
    typer.echo(dumps(VerifyReportModel.from_report(report)), nl=False)
    if not report.passed and not force:
        console.print("[red]Certificate failed verification; not written[/red]")
        return EXIT_NEGATIVE
    path = save()
    console.print(f"[green]Wrote {path}[/green]")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


@app.command()
def verify(
    cert_path: Path = typer.Argument(..., help="realization.json or bordered.json"),
    eq_tol: Optional[float] = EqTol,
    zero_tol: Optional[float] = ZeroTol,
    spectrum_tol: Optional[float] = SpectrumTol,
    decomp_tol: Optional[float] = DecompTol,
) -> None:
    """Re-check a stored certificate from its matrices alone."""

    def body() -> int:
        settings = _setup()
        tol = _tolerances(
            settings,
            eq_tol=eq_tol,
            zero_tol=zero_tol,
            spectrum_tol=spectrum_tol,
            decomp_tol=decomp_tol,
        )
        cert = CertificateRepository().load_certificate(cert_path)
        if isinstance(cert, Realization):
            report = check_realization(cert, tol=tol)
        else:
            report = check_bordered(cert, tol)
        _print_checks(report, "Verification")
        typer.echo(dumps(VerifyReportModel.from_report(report)), nl=False)
        return EXIT_OK if report.passed else EXIT_NEGATIVE

    _run(body)


@app.command()
def gen(
    n: int = typer.Option(..., "--n", help="Degree of f and g"),
    p: int = typer.Option(..., "--p"),
    q: int = typer.Option(..., "--q"),
    seed: Optional[int] = typer.Option(
        None, "--seed", help="Falls back to WEYL_FORGE_SEED"
    ),
    min_gap: float = typer.Option(DEFAULT_MIN_GAP, "--min-gap"),
    out: Path = typer.Option(Path("pair.json"), "--out", "-o"),
) -> None:
    """Write a seeded random pair f (p,q)-interlacing g."""

    def body() -> int:
        settings = _setup()
        chosen = settings.seed if seed is None else seed
        f, g = gen_pq_pair(n, p, q, min_gap, chosen)
        pair = PairModel(
            f=PolyModel.from_poly(f),
            g=PolyModel.from_poly(g),
            n=n,
            p=p,
            q=q,
            seed=chosen,
            min_gap=min_gap,
        )
        CertificateRepository().save_pair(out, pair)
        typer.echo(dumps(pair), nl=False)
        return EXIT_OK

    _run(body)


@app.command()
def selftest(
    scale: float = typer.Option(
        0.01, "--scale", min=0.0, help="Fraction of the full instance counts"
    ),
    seed: Optional[int] = typer.Option(None, "--seed"),
) -> None:
    """Run every property family on seeded instances."""

    def body() -> int:
        settings = _setup()
        chosen = settings.seed if seed is None else seed
        console.print(f"[dim]Property suite: scale={scale}, seed={chosen}[/dim]")
        report = run_property_suite(scale, chosen, settings.tolerances)
        _print_checks(report, "Property suite")
        typer.echo(dumps(VerifyReportModel.from_report(report)), nl=False)
        return EXIT_OK if report.passed else EXIT_NEGATIVE

    _run(body)


if __name__ == "__main__":
    app()
