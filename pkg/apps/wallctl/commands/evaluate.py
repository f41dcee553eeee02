"""Scenario evaluation command."""

from pathlib import Path

import typer

from libs.core.errors import ScenarioError
from libs.core.logging import get_logger
from libs.scenario.parser import parse_scenario
from libs.scenario.runner import run_scenario
from ..render import echo_report, print_checks, print_failures

logger = get_logger("wallctl.eval")


def eval_scenario(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="Scenario file (.mwc)"),
    json_output: bool = typer.Option(False, "--json", help="Output the report as JSON")
):
    """Parse and run a scenario file; exit 1 if any expectation fails."""
    try:
        source = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        typer.echo(f"Error: cannot read {path}: {e}", err=True)
        raise typer.Exit(2)

    try:
        scenario = parse_scenario(source, name=path.stem)
    except ScenarioError as e:
        logger.info(f"rejected {path}: {e}", extra={"scenario": path.stem})
        typer.echo(f"{path}:{e}", err=True)
        raise typer.Exit(2)

    report = run_scenario(scenario)

    if json_output:
        echo_report(ctx, report)
    else:
        for model in report.models:
            if model.error:
                typer.echo(f"{model.name}: error: {model.error}")
            else:
                typer.echo(f"{model.name} = {model.value}")
        if report.checks:
            print_checks(report.checks, title=f"Scenario {scenario.name}")
        print_failures(report.checks)

    if not report.ok:
        raise typer.Exit(1)
