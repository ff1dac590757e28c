"""Shared CLI helpers: consoles, error mapping and matrix formatting."""

from __future__ import annotations

import functools
import sys
from collections.abc import Callable
from typing import Any, TypeVar

import click
import numpy as np
import structlog
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from anyon_compiler.core.config import CompilerConfig
from anyon_compiler.exceptions import CompilerError

logger = structlog.get_logger(__name__)

console = Console()
err_console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., Any])


def handle_errors(func: F) -> F:
    """Map library errors onto exit codes: 1 usage/numerical, 2 fixtures, 3 budget."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except CompilerError as e:
            logger.debug("command_failed", exit_code=e.exit_code, **e.to_dict())
            err_console.print(f"[red]error[/red] \\[{e.code}] {escape(e.message)}")
            sys.exit(e.exit_code)
        except ValidationError as e:
            err_console.print(f"[red]error[/red] \\[USAGE_ERROR] {escape(str(e))}")
            sys.exit(1)

    return wrapper  # type: ignore[return-value]


def get_config(ctx: click.Context) -> CompilerConfig:
    obj = ctx.find_root().obj or {}
    return obj.get("config") or CompilerConfig()


def get_threads(ctx: click.Context, threads: int | None) -> int | None:
    if threads is not None:
        return threads
    obj = ctx.find_root().obj or {}
    settings = obj.get("settings")
    return settings.anyon_compiler_threads if settings else None


def format_complex(z: complex, precision: int = 8) -> str:
    """Print as a+bi with fixed fractional digits."""
    return f"{z.real:.{precision}f}{z.imag:+.{precision}f}i"


def matrix_rows(matrix: np.ndarray, precision: int = 8) -> list[list[str]]:
    return [[format_complex(complex(z), precision) for z in row] for row in matrix]


def matrix_table(title: str, matrix: np.ndarray, basis: tuple[str, ...], precision: int = 8) -> Table:
    table = Table(title=title, show_header=True, header_style="bold")
    table.add_column("")
    for label in basis:
        table.add_column(label, justify="right")
    for label, row in zip(basis, matrix_rows(matrix, precision), strict=True):
        table.add_row(label, *row)
    return table
