from pathlib import Path
from typing import Optional

import typer
from loguru import logger
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from tropical_curves import CoeffMatrix, CoefficientFormatError, NotSmoothError, build_curve, random_smooth_curve

from tritangent_classes.config import AnalysisConfig
from tritangent_classes.consts import (
    EXIT_BAD_INPUT,
    EXIT_CHECKS_FAILED,
    EXIT_NON_GENERIC,
    EXIT_NOT_SMOOTH,
    EXIT_OK,
    REPORT_FILENAME,
)
from tritangent_classes.exceptions import NonGenericCurveError, PerturbationError, TritangentError
from tritangent_classes.lifting.report import LiftingReport, verify_report
from tritangent_classes.render import render_to_file
from tritangent_classes.utils.logger import setup_logger

app = typer.Typer(
    name="tritangents",
    help="Tritangent classes of smooth tropical (3,3)-curves",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
    context_settings={"help_option_names": ["-h", "--help"]},
)

console = Console()


def load_coefficients(config: AnalysisConfig) -> CoeffMatrix:
    if config.input_path is not None:
        return CoeffMatrix.from_json(config.input_path)
    coeffs, _ = random_smooth_curve(config.random_seed)
    return coeffs


def run_analysis(config: AnalysisConfig) -> tuple[LiftingReport | None, int]:
    """Analyze the configured curve, re-perturbing non-generic coefficients."""
    coeffs = load_coefficients(config)
    report = None
    for round_ in range(config.perturbation_retry_limit + 1):
        try:
            curve = build_curve(coeffs)
        except NotSmoothError as e:
            logger.error(f"Input curve is {e}")
            return None, EXIT_NOT_SMOOTH
        try:
            report = verify_report(curve, check_d4=config.check_d4)
        except (NonGenericCurveError, PerturbationError) as e:
            logger.warning(f"Analysis aborted: {e}")
            report = None
        else:
            report.perturbation_rounds = round_
            if not report.non_generic:
                break
        logger.warning(f"Non-generic coefficients, perturbing by i*j*{config.perturbation_delta}")
        coeffs = coeffs.perturbed(config.perturbation_delta)
    if report is None or report.non_generic:
        logger.error(f"Still non-generic after {config.perturbation_retry_limit} perturbations")
        return report, EXIT_NON_GENERIC
    if not report.passed:
        return report, EXIT_CHECKS_FAILED
    return report, EXIT_OK


def print_summary(report: LiftingReport) -> None:
    curve = report.curve
    console.print(
        Panel.fit(
            "\n".join(
                [
                    f"[bold white]Vertices:[/] [cyan]{len(curve.vertices)}[/]",
                    f"[bold white]Bounded edges:[/] [cyan]{len(curve.edges)}[/]",
                    f"[bold white]Legs:[/] [cyan]{len(curve.legs)}[/]",
                    f"[bold white]Perturbation rounds:[/] [cyan]{report.perturbation_rounds}[/]",
                ]
            ),
            title="[bold]Curve",
            border_style="cyan",
        )
    )
    table = Table(title="Tritangent classes")
    for column in ("class", "cells", "dims (ns, b, Θ)", "partition", "(4b)", "members"):
        table.add_column(column)
    for cls in report.classes:
        table.add_row(
            str(cls.id),
            str(len(cls.cells)),
            str(cls.dims),
            str(cls.partition) if cls.partition is not None else "[red]n/a[/]",
            "yes" if cls.has4b else "",
            " ".join(str(m.multiplicity) for m in cls.liftable_members),
        )
    console.print(table)
    for name, check in report.checks.items():
        status = {True: "[green]pass[/]", False: "[bold red]FAIL[/]", None: "[yellow]n/a[/]"}[check.passed]
        console.print(f"{status} {name} {check.detail}")


@app.command()
def analyze(
    input_path: Optional[Path] = typer.Option(None, "--input", help="JSON file with a 4x4 coefficient matrix"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Analyze a random smooth curve instead"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output directory"),
    render: Optional[bool] = typer.Option(None, "--render/--no-render", help="Write one SVG per class"),
    config_path: Optional[Path] = typer.Option(None, "--config", help="YAML analysis config"),
    retries: Optional[int] = typer.Option(None, "--retries", help="Re-perturbation attempts"),
    check_d4: Optional[bool] = typer.Option(None, "--d4/--no-d4", help="Check invariance under the 8 symmetries"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Log level"),
) -> None:
    """Compute the tritangent classes of a curve and write the JSON report."""
    overrides = {
        "input_path": input_path,
        "random_seed": seed,
        "output_dir": out,
        "render": render,
        "perturbation_retry_limit": retries,
        "check_d4": check_d4,
        "log_level": log_level,
    }
    try:
        if config_path is not None:
            config = AnalysisConfig.from_yaml(config_path, **overrides)
        else:
            config = AnalysisConfig(**{k: v for k, v in overrides.items() if v is not None})
    except ValueError as e:
        typer.echo(f"Invalid configuration: {e}", err=True)
        raise typer.Exit(code=EXIT_BAD_INPUT)
    setup_logger(config.log_level)

    try:
        report, code = run_analysis(config)
    except CoefficientFormatError as e:
        typer.echo(str(e), err=True)
        raise typer.Exit(code=EXIT_BAD_INPUT)
    if report is None:
        typer.echo("not smooth" if code == EXIT_NOT_SMOOTH else "non-generic curve", err=True)
        raise typer.Exit(code=code)

    path = report.save(config.output_dir / REPORT_FILENAME)
    logger.info(f"Report written to {path}")
    if config.render:
        for cls in report.classes:
            render_to_file(report, cls.id, config.output_dir)
    print_summary(report)
    for name in report.failed_checks:
        typer.echo(f"check failed: {name}", err=True)
    raise typer.Exit(code=code)


@app.command()
def random(
    seed: int = typer.Option(..., "--seed", help="Random seed"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the coefficients here instead of stdout"),
) -> None:
    """Sample a smooth curve and print its coefficient matrix."""
    coeffs, _ = random_smooth_curve(seed)
    if out is None:
        typer.echo(coeffs.to_json())
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(coeffs.to_json())
    typer.echo(f"Coefficients written to {out}")


@app.command()
def render(
    report_path: Path = typer.Option(..., "--report", help="Report written by `analyze`"),
    class_id: int = typer.Option(..., "--class-id", "--class", help="Class to draw"),
    out: Path = typer.Option(Path("."), "--out", help="Output directory"),
) -> None:
    """Draw one class of a saved report as SVG."""
    report = LiftingReport.load(report_path)
    try:
        path = render_to_file(report, class_id, out)
    except TritangentError as e:
        typer.echo(str(e), err=True)
        raise typer.Exit(code=EXIT_CHECKS_FAILED)
    typer.echo(f"Class {class_id} written to {path}")


@app.callback()
def callback():
    # Empty command to enable subcommands
    pass


def main():
    app()


if __name__ == "__main__":
    main()
