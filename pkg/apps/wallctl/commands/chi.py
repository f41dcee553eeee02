"""Euler-pairing bookkeeping command."""

import typer

from libs.core.errors import AtomDomainError, ValidationError
from libs.core.models import ChiSummary, ExtensionRow
from libs.ledger.classes import (
    PairClass,
    chi_pair_self,
    expected_dim,
    extension_ledger,
)
from libs.ledger.pipeline import infinity_model
from libs.motivic.polyring import format_polynomial
from ..render import config_of


def show_chi(
    ctx: typer.Context,
    d: int = typer.Argument(..., help="Degree d (at least 1)"),
    chi: int = typer.Argument(..., help="Euler characteristic chi"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON")
):
    """Show chi pairings, expected dimension and M^infinity for (d, chi)."""
    if d < 1:
        raise typer.BadParameter("degree must be positive", param_hint="D")

    c = PairClass(d, chi)
    model, model_error = None, None
    try:
        model = format_polynomial(infinity_model(c))
    except (AtomDomainError, ValidationError) as e:
        model_error = str(e)

    summary = ChiSummary(
        d=d,
        chi=chi,
        chi_pair_self=chi_pair_self(c),
        expected_dim=expected_dim(c),
        point_count=c.point_count,
        infinity_model=model,
        infinity_model_error=model_error,
        extensions=[
            ExtensionRow(
                label=r.label,
                alpha=str(r.wall.alpha),
                forward=r.record.forward,
                reverse=r.record.reverse,
            )
            for r in extension_ledger()
            if r.wall.parent == c
        ],
    )

    if json_output:
        typer.echo(summary.model_dump_json(indent=config_of(ctx).json_indent or None))
        return

    typer.echo(f"\nClass ({d},{chi})")
    typer.echo(f"  chi((1,F),(1,F)): {summary.chi_pair_self}")
    typer.echo(f"  Expected dimension: {summary.expected_dim}")
    typer.echo(f"  Points n: {summary.point_count}")
    if model is not None:
        typer.echo(f"  P(M^inf) = {model}")
    else:
        typer.echo(f"  P(M^inf): {model_error}")

    if summary.extensions:
        typer.echo("\nExtensions (forward, reverse)")
        for row in summary.extensions:
            typer.echo(f"  alpha={row.alpha}  {row.label}: {row.forward}, {row.reverse}")
