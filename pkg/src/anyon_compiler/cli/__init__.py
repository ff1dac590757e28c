"""Command-line interface for anyon-compiler."""

from anyon_compiler.cli.main import app

__all__ = ["app"]
