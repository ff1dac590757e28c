"""anyon-compiler CLI main entry point."""

from __future__ import annotations

from pathlib import Path

import click

from anyon_compiler import __version__
from anyon_compiler.cli.commands.compile import compile_cmd
from anyon_compiler.cli.commands.ebm import ebm
from anyon_compiler.cli.commands.sweep import sweep
from anyon_compiler.cli.commands.verify import verify
from anyon_compiler.cli.common import handle_errors
from anyon_compiler.core.config import CompilerConfig, CompilerSettings
from anyon_compiler.observability import setup_logging


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None,
              help="YAML or key=value config file (default: $ANYON_COMPILER_CONFIG_PATH).")
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR.")
@click.option("--json-logs", is_flag=True, default=False, help="Emit JSON log lines on stderr.")
@click.pass_context
@handle_errors
def app(ctx: click.Context, config_path: Path | None, log_level: str | None, json_logs: bool) -> None:
    """anyon-compiler - braidword compilation for SU(2)_k anyons."""
    settings = CompilerSettings()
    config = CompilerConfig.from_file(config_path or settings.anyon_compiler_config_path)
    setup_logging(
        log_level or config.logging.level or settings.anyon_compiler_log_level,
        json_logs or config.logging.json_logs,
    )
    ctx.obj = {"config": config, "settings": settings}


@app.command()
def version() -> None:
    """Show version information."""
    click.echo(f"anyon-compiler version {__version__}")


app.add_command(ebm)
app.add_command(compile_cmd)
app.add_command(verify)
app.add_command(sweep)


if __name__ == "__main__":
    app()
