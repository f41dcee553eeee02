"""C3 reconstruction diagnostic command."""

import typer

from libs.ledger.reconstruct import reconstruct_c3
from libs.ledger.suite import reconstruction_diagnostics
from ..render import echo_rows, print_diagnostics


def show_reconstruction(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Output as JSON")
):
    """Split the alpha=3 wall into strata and try to recover P(M+(3,0))."""
    rows = reconstruction_diagnostics(reconstruct_c3())

    if json_output:
        echo_rows(ctx, rows)
        return

    print_diagnostics(rows, title="alpha=3 wall reconstruction")
