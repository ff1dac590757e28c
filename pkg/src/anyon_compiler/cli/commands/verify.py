"""Re-check every golden fixture."""

from __future__ import annotations

from pathlib import Path

import click
from rich.table import Table

from anyon_compiler.cli.common import console, handle_errors
from anyon_compiler.core.verification import FixtureCheck, verify_fixtures
from anyon_compiler.exceptions import FixtureVerificationError


def _status(check: FixtureCheck) -> str:
    if not check.passed:
        return "[red]FAIL[/red]"
    if check.deviation:
        return "[yellow]DEVIATION[/yellow]"
    return "[green]PASS[/green]"


@click.command()
@click.option("--fixtures", "fixtures_path", type=click.Path(exists=True, path_type=Path), default=None,
              help="Fixture YAML (default: the packaged file).")
@click.option("--failures-only", is_flag=True, default=False, help="List failing checks only.")
@handle_errors
def verify(fixtures_path: Path | None, failures_only: bool) -> None:
    """Recompute printed matrices and braidword metrics; exit 2 on any mismatch.

    Rows marked as known deviations are checked against their recorded
    measurement and listed with the printed value alongside.
    """
    report = verify_fixtures(fixtures_path)

    table = Table(title="Fixture verification", show_header=True, header_style="bold")
    table.add_column("Check")
    table.add_column("Expected", justify="right")
    table.add_column("Measured", justify="right")
    table.add_column("Error", justify="right")
    table.add_column("Printed", justify="right")
    table.add_column("Status")
    for check in report.checks:
        if failures_only and check.passed:
            continue
        table.add_row(
            check.name,
            f"{check.expected:.8g}",
            f"{check.measured:.8g}",
            f"{check.error:.2e}",
            f"{check.published:.3g}" if check.published is not None else "",
            _status(check),
        )
    console.print(table)

    if not report.passed:
        raise FixtureVerificationError(report.offenders)
    console.print(f"[green]✓[/green] {len(report.checks)} checks passed")
    if report.deviations:
        console.print(f"[yellow]![/yellow] {len(report.deviations)} printed values are known deviations")
