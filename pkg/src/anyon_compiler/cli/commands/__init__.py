"""CLI commands."""

from anyon_compiler.cli.commands.compile import compile_cmd
from anyon_compiler.cli.commands.ebm import ebm
from anyon_compiler.cli.commands.sweep import sweep
from anyon_compiler.cli.commands.verify import verify

__all__ = ["compile_cmd", "ebm", "sweep", "verify"]
