"""Table and JSON output shared by the wallctl verbs."""

import json
from typing import Iterable, List

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from libs.core.config import CalculatorConfig
from libs.core.models import CheckResult, Diagnostic, VerificationReport

console = Console()


def config_of(ctx: typer.Context) -> CalculatorConfig:
    obj = ctx.obj if ctx is not None else None
    return obj if isinstance(obj, CalculatorConfig) else CalculatorConfig()


def echo_rows(ctx: typer.Context, rows: Iterable[BaseModel]):
    """Print rows as a JSON array."""
    payload: List[dict] = [row.model_dump(mode="json", by_alias=True) for row in rows]
    typer.echo(json.dumps(payload, indent=config_of(ctx).json_indent or None))


def echo_report(ctx: typer.Context, report: VerificationReport):
    typer.echo(report.to_json(indent=config_of(ctx).json_indent or None))


def print_checks(checks: List[CheckResult], title: str = "Checks"):
    table = Table(title=title)
    table.add_column("Check", style="cyan")
    table.add_column("Result", no_wrap=True)
    table.add_column("Detail", style="white")

    for check in checks:
        status = "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]"
        if check.error:
            detail = check.error
        elif check.passed:
            detail = check.computed or ""
        else:
            detail = f"residual {check.residual}" if check.residual else f"got {check.computed}"
        table.add_row(check.name, status, detail)

    console.print(table)


def print_diagnostics(diagnostics: List[Diagnostic], title: str = "Diagnostics"):
    if not diagnostics:
        return
    table = Table(title=title)
    table.add_column("Item", style="cyan")
    table.add_column("Value", style="white")
    for row in diagnostics:
        table.add_row(row.name, row.value)
    console.print(table)


def print_failures(checks: List[CheckResult]):
    """Residuals of failed checks, unwrapped so they can be copied."""
    for check in checks:
        if check.passed:
            continue
        if check.error:
            typer.echo(f"FAIL {check.name}: {check.error}")
        else:
            typer.echo(f"FAIL {check.name}: residual = {check.residual}")
