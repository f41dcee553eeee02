"""Atom table command."""

import typer
from rich.table import Table

from libs.core.models import AtomRow
from libs.motivic.motives import atom_table
from libs.motivic.polyring import format_polynomial
from ..render import console, echo_rows


def list_atoms(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Output as JSON")
):
    """Show the closed-form polynomials of the atom spaces."""
    rows = [
        AtomRow(
            name=name,
            polynomial=format_polynomial(value),
            degree=int(value.degree),
            euler=value.eval_at(1),
            palindromic=value.is_palindromic(),
        )
        for name, value in atom_table()
    ]

    if json_output:
        echo_rows(ctx, rows)
        return

    table = Table(title="Atom spaces")
    table.add_column("Space", style="cyan", no_wrap=True)
    table.add_column("P(X)", style="white")
    table.add_column("Dim", style="magenta", justify="right")
    table.add_column("Euler", style="green", justify="right")
    table.add_column("Palindromic", style="yellow")

    for row in rows:
        table.add_row(
            row.name, row.polynomial, str(row.degree), str(row.euler),
            "yes" if row.palindromic else "no"
        )

    console.print(table)
