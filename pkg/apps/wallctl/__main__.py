"""wallctl CLI entry point."""

import sys
from pathlib import Path
from typing import Optional

import typer

from libs.core.config import load_config
from libs.core.errors import ConfigurationError
from libs.core.logging import get_logger, setup_logging
from .commands import atoms, chi, evaluate, reconstruct, verify, walls

logger = get_logger("wallctl")

# Negative chi values ("walls 5 -2") must reach the argument parser.
_NUMERIC_ARGS = {"ignore_unknown_options": True}

app = typer.Typer(
    help="Virtual Poincare polynomials across the walls of alpha-stable pairs",
    no_args_is_help=True
)

app.command("eval")(evaluate.eval_scenario)
app.command("verify")(verify.verify)
app.command("atoms")(atoms.list_atoms)
app.command("walls", context_settings=_NUMERIC_ARGS)(walls.list_walls)
app.command("chi", context_settings=_NUMERIC_ARGS)(chi.show_chi)
app.command("reconstruct")(reconstruct.show_reconstruction)


@app.callback()
def main_options(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", help="TOML configuration file"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Also log to this file"),
    plain_logs: bool = typer.Option(False, "--plain-logs", help="Plain-text instead of JSON logs"),
):
    """Global options shared by every verb."""
    overrides = {
        "log_level": log_level,
        "log_file": log_file,
        "structured_logs": False if plain_logs else None,
    }
    try:
        cfg = load_config(config, overrides)
        setup_logging(
            log_level=cfg.log_level,
            log_file=cfg.log_file,
            structured=cfg.structured_logs,
        )
    except (ConfigurationError, ValueError) as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(2)
    ctx.obj = cfg


def main():
    """Main entry point."""
    try:
        app()
    except Exception as e:
        logger.error(f"CLI error: {e}")
        typer.echo(f"Error: {e}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
