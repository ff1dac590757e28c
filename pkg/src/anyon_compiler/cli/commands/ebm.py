"""Print elementary braiding matrices."""

from __future__ import annotations

import json
from pathlib import Path

import click

from anyon_compiler.anyons import AnyonModel, Encoding, braid_relation_residuals, generators
from anyon_compiler.cli.common import console, get_config, handle_errors, matrix_rows, matrix_table


@click.command()
@click.option("--k", "level", type=int, required=True, help="Level k of SU(2)_k (k >= 3).")
@click.option("--encoding", type=click.Choice([e.value for e in Encoding]), default=Encoding.ONE_QUBIT.value,
              show_default=True)
@click.option("--anyon", type=int, default=1, show_default=True, help="Doubled spin label of the encoded anyons.")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Also write the matrices as JSON.")
@click.pass_context
@handle_errors
def ebm(ctx: click.Context, level: int, encoding: str, anyon: int, out: Path | None) -> None:
    """Show the generators σ_i of one encoding and their braid-relation residuals."""
    precision = get_config(ctx).output.precision
    gens = generators(AnyonModel(level), encoding, anyon)
    residuals = braid_relation_residuals(gens)

    for i, matrix in enumerate(gens.matrices, start=1):
        console.print(matrix_table(f"SU(2)_{level} σ{i} ({encoding})", matrix.entries, gens.basis_order, precision))
    console.print("[bold]Residuals[/bold]")
    for name, value in residuals.items():
        console.print(f"  {name:<12} {value:.3e}")

    if out is not None:
        record = {
            "model_k": level,
            "encoding": encoding,
            "anyon": anyon,
            "basis": list(gens.basis_order),
            "generators": [matrix_rows(m.entries, precision) for m in gens.matrices],
            "residuals": residuals,
        }
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(record, indent=2) + "\n")
        console.print(f"[green]✓[/green] Wrote {out}")
