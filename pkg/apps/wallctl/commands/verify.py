"""Built-in verification command."""

from pathlib import Path
from typing import Optional

import typer

from libs.ledger.builtin import builtin_scenario_52
from libs.ledger.suite import verification_report
from libs.scenario.printer import print_scenario
from ..render import echo_report, print_checks, print_diagnostics, print_failures

CHECK_C3 = "c3-reconstruction"


def verify(
    ctx: typer.Context,
    check: Optional[str] = typer.Option(
        None, "--check", help=f"Extra diagnostic to run ({CHECK_C3})"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output the report as JSON"),
    emit_scenario: Optional[Path] = typer.Option(
        None, "--emit-scenario", help="Write the built-in scenario to this file"
    )
):
    """Reproduce the published (5,2) polynomials and wall data."""
    if check is not None and check != CHECK_C3:
        raise typer.BadParameter(f"unknown check '{check}'", param_hint="--check")

    if emit_scenario:
        try:
            emit_scenario.write_text(print_scenario(builtin_scenario_52()), encoding="utf-8")
        except OSError as e:
            typer.echo(f"Error: cannot write {emit_scenario}: {e}", err=True)
            raise typer.Exit(2)
        typer.echo(f"✓ Scenario written to {emit_scenario}", err=json_output)

    report = verification_report(include_reconstruction=check == CHECK_C3)

    if json_output:
        echo_report(ctx, report)
    else:
        print_checks(report.checks, title="Verification")
        print_diagnostics(report.diagnostics)
        print_failures(report.checks)
        passed = sum(c.passed for c in report.checks)
        typer.echo(f"{passed}/{len(report.checks)} checks passed")

    if not report.ok:
        raise typer.Exit(1)
