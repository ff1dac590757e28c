"""Compile one target into a braidword."""

from __future__ import annotations

import json
from pathlib import Path

import click

from anyon_compiler.anyons import Encoding
from anyon_compiler.cli.common import console, get_config, get_threads, handle_errors
from anyon_compiler.core.runner import compile_run, resolve_threads, result_record, write_result
from anyon_compiler.models import Engine, RunConfig, TargetName


@click.command("compile")
@click.option("--k", "level", type=int, required=True, help="Level k of SU(2)_k (k >= 3).")
@click.option("--encoding", type=click.Choice([e.value for e in Encoding]), default=None,
              help="Defaults to the target's encoding.")
@click.option("--target", type=click.Choice([t.value for t in TargetName]), required=True)
@click.option("--engine", type=click.Choice([e.value for e in Engine]), default=Engine.GA.value, show_default=True)
@click.option("--length", type=int, default=None, help="Braidword length (exhaustive, ga).")
@click.option("--sk-level", type=int, default=None, help="Recursion depth (sk).")
@click.option("--inverses", is_flag=True, default=False, help="Add inverse generators to the alphabet.")
@click.option("--seed", type=int, default=None, help="RNG seed (default: search.rng_seed).")
@click.option("--anyon", type=int, default=1, show_default=True)
@click.option("--custom-target", type=click.Path(exists=True, path_type=Path), default=None,
              help=".npy matrix for --target custom.")
@click.option("--leakage-weight", type=float, default=0.0, show_default=True,
              help="Weight of d^U added to two-qubit class distances.")
@click.option("--population-size", type=int, default=None)
@click.option("--mutation-prob", type=float, default=None)
@click.option("--crossovers", "crossovers_per_generation", type=int, default=None)
@click.option("--survivors", type=int, default=None)
@click.option("--generations", type=int, default=None)
@click.option("--base-length", type=int, default=None, help="GA length of the SK level-0 seed.")
@click.option("--stop-distance", type=float, default=None)
@click.option("--max-retries", type=int, default=None)
@click.option("--threads", type=int, default=None, help="Exhaustive workers (0: one per CPU).")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Result JSON (default: stdout).")
@click.option("--timings", is_flag=True, default=False, help="Include wall time in the record.")
@click.pass_context
@handle_errors
def compile_cmd(
    ctx: click.Context,
    level: int,
    encoding: str | None,
    target: str,
    engine: str,
    length: int | None,
    sk_level: int | None,
    inverses: bool,
    seed: int | None,
    anyon: int,
    custom_target: Path | None,
    leakage_weight: float,
    threads: int | None,
    out: Path | None,
    timings: bool,
    **search_overrides: int | float | None,
) -> None:
    """Compile TARGET at level k with the chosen engine and print the result record."""
    config = get_config(ctx).with_overrides({**search_overrides, "rng_seed": seed})
    target_name = TargetName(target)
    if encoding is None:
        encoding = (target_name.encoding or Encoding.ONE_QUBIT).value

    run = RunConfig(
        level=level,
        encoding=encoding,
        target=target_name,
        engine=engine,
        length=length,
        sk_level=sk_level,
        include_inverses=inverses,
        anyon=anyon,
        leakage_weight=leakage_weight,
        custom_target_path=custom_target,
        search=config.search,
    )
    result = compile_run(run, config, threads=resolve_threads(get_threads(ctx, threads)))
    record = result_record(result, run, include_timing=timings)

    if out is None:
        click.echo(json.dumps(record, indent=2, sort_keys=True))
        return
    write_result(record, out)
    console.print(f"[bold]{result.word.text or '(empty)'}[/bold]")
    console.print(f"  length    {result.length}")
    console.print(f"  distance  {result.distance:.3e}")
    if result.leakage is not None:
        console.print(f"  |M11|     {result.leakage.m11:.3e}")
        console.print(f"  dU        {result.leakage.dU:.3e}")
    console.print(f"[green]✓[/green] Wrote {out}")
