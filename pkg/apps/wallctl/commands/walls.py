"""Wall listing command."""

import typer
from rich.table import Table

from libs.core.models import WallRow
from libs.ledger.classes import PairClass, group_by_alpha, wall_enumerate
from ..render import console, echo_rows


def list_walls(
    ctx: typer.Context,
    d: int = typer.Argument(..., help="Degree d (at least 2)"),
    chi: int = typer.Argument(..., help="Euler characteristic chi"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON")
):
    """List the walls of M^alpha(d, chi), largest alpha first."""
    if d < 2:
        raise typer.BadParameter("degree must be at least 2", param_hint="D")

    candidates = wall_enumerate(PairClass(d, chi))
    rows = [
        WallRow(
            alpha=str(w.alpha),
            sub=str(w.sub),
            quotient=str(w.quotient),
            quotient_points=w.quotient.point_count,
        )
        for w in candidates
    ]

    if json_output:
        echo_rows(ctx, rows)
        return

    if not rows:
        typer.echo(f"No walls for ({d},{chi})")
        return

    table = Table(title=f"Walls of M^alpha({d},{chi})")
    table.add_column("alpha", style="cyan", justify="right")
    table.add_column("Sub (0,F')", style="magenta")
    table.add_column("Quotient (1,F'')", style="green")
    table.add_column("Points", style="yellow", justify="right")
    for row in rows:
        table.add_row(row.alpha, row.sub, row.quotient, str(row.quotient_points))
    console.print(table)

    typer.echo(f"{len(group_by_alpha(candidates))} walls, {len(rows)} candidates")
