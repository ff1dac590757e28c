"""Run a grid of compilations into a CSV file."""

from __future__ import annotations

from pathlib import Path

import click
from rich.table import Table

from anyon_compiler.anyons import Encoding
from anyon_compiler.cli.common import console, err_console, get_config, get_threads, handle_errors
from anyon_compiler.core.runner import resolve_threads, run_sweep
from anyon_compiler.exceptions import UsageError
from anyon_compiler.models import Engine, SweepSpec, TargetName


def parse_int_list(text: str | None) -> list[int]:
    """Parse ``"1-5,7,9-11"`` into ``[1, 2, 3, 4, 5, 7, 9, 10, 11]``."""
    if not text:
        return []
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        start, sep, stop = part.partition("-")
        try:
            if sep:
                lo, hi = int(start), int(stop)
                if hi < lo:
                    raise UsageError(f"empty range {part!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
        except ValueError as e:
            raise UsageError(f"not an integer list: {text!r}") from e
    return values


@click.command()
@click.option("--k", "levels", type=int, multiple=True, required=True, help="Level k; repeat for several.")
@click.option("--encoding", type=click.Choice([e.value for e in Encoding]), required=True)
@click.option("--target", type=click.Choice([t.value for t in TargetName if t is not TargetName.CUSTOM]),
              required=True)
@click.option("--lengths", default=None, help="Braidword lengths, e.g. 1-13 or 5,10,15.")
@click.option("--sk-levels", default=None, help="Solovay-Kitaev depths, e.g. 0-3.")
@click.option("--seeds", default="0", show_default=True, help="RNG seeds, e.g. 0-9.")
@click.option("--inverses", is_flag=True, default=False)
@click.option("--engine", type=click.Choice(["auto"] + [e.value for e in Engine]), default="auto",
              show_default=True, help="auto: exhaustive up to the threshold length, GA above.")
@click.option("--leakage-weight", type=float, default=0.0, show_default=True)
@click.option("--threads", type=int, default=None, help="Concurrent sweep points (0: one per CPU).")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="CSV file (default: <results_dir>/sweep.csv).")
@click.pass_context
@handle_errors
def sweep(
    ctx: click.Context,
    levels: tuple[int, ...],
    encoding: str,
    target: str,
    lengths: str | None,
    sk_levels: str | None,
    seeds: str,
    inverses: bool,
    engine: str,
    leakage_weight: float,
    threads: int | None,
    out: Path | None,
) -> None:
    """Sweep lengths or SK depths over levels and seeds; one CSV row per point and seed."""
    config = get_config(ctx)
    spec = SweepSpec(
        levels=list(levels),
        encoding=encoding,
        target=target,
        lengths=parse_int_list(lengths),
        sk_levels=parse_int_list(sk_levels),
        seeds=parse_int_list(seeds),
        include_inverses=inverses,
        threshold_no_inverses=config.sweep.threshold_no_inverses,
        threshold_with_inverses=config.sweep.threshold_with_inverses,
        engine=None if engine == "auto" else engine,
        leakage_weight=leakage_weight,
        search=config.search,
    )
    out = out or Path(config.output.results_dir) / "sweep.csv"
    rows = run_sweep(spec, config, out, threads=resolve_threads(get_threads(ctx, threads)))

    table = Table(title=f"Sweep {target} ({encoding})", show_header=True, header_style="bold")
    for column in ("k", "engine", "length", "seed", "distance"):
        table.add_column(column, justify="right")
    for row in rows:
        distance = f"{row.distance:.3e}" if row.distance is not None else f"[red]{row.error}[/red]"
        table.add_row(str(row.model_k), row.engine, str(row.length), str(row.seed), distance)
    console.print(table)
    console.print(f"[green]✓[/green] Wrote {len(rows)} rows to {out}")
    failed = [row for row in rows if row.error]
    if failed:
        codes = ", ".join(sorted({row.error for row in failed if row.error}))
        err_console.print(f"[yellow]warning[/yellow] {len(failed)} point(s) failed: {codes}")
