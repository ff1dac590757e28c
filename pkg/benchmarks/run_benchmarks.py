#!/usr/bin/env python3
"""Run all performance benchmarks and generate report."""

import json
import os
import sys
from datetime import datetime

from rich.console import Console
from rich.table import Table

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from benchmarks.bench_evaluation import EvaluationBenchmark  # noqa: E402
from benchmarks.bench_exhaustive import ExhaustiveBenchmark  # noqa: E402
from benchmarks.bench_ga import GeneticBenchmark  # noqa: E402
from benchmarks.config import RESULTS_DIR, SLA_TARGETS  # noqa: E402

console = Console()


def run_all_benchmarks() -> bool:
    """Run all benchmarks and collect results."""
    console.rule("anyon-compiler benchmark suite")
    console.print(f"Started at: {datetime.now().isoformat()}")

    all_results = {
        "timestamp": datetime.now().isoformat(),
        "sla_targets": SLA_TARGETS,
        "benchmarks": {},
    }
    suite = [
        ("evaluate_batch", EvaluationBenchmark),
        ("exhaustive_two_qubit", ExhaustiveBenchmark),
        ("ga_one_qubit", GeneticBenchmark),
    ]
    for name, bench in suite:
        with console.status(f"Running {name}..."):
            all_results["benchmarks"][name] = bench().run()

    table = Table(title="Benchmark summary")
    table.add_column("Benchmark")
    table.add_column("Mean (ms)", justify="right")
    table.add_column("Max (ms)", justify="right")
    table.add_column("SLA (ms)", justify="right")
    table.add_column("Met", justify="center")
    for name, stats in all_results["benchmarks"].items():
        table.add_row(
            name,
            f"{stats['mean_ms']:.2f}",
            f"{stats['max_ms']:.2f}",
            f"{stats['sla_target_ms']:.0f}",
            "[green]✓[/green]" if stats["sla_met"] else "[red]✗[/red]",
        )
    console.print(table)

    os.makedirs(RESULTS_DIR, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    results_file = os.path.join(RESULTS_DIR, f"benchmark_{timestamp}.json")
    with open(results_file, "w") as f:
        json.dump(all_results, f, indent=2)
    console.print(f"Results saved to: {results_file}")

    all_slas_met = all(stats["sla_met"] for stats in all_results["benchmarks"].values())
    console.print(f"All SLAs met: {'[green]YES[/green]' if all_slas_met else '[red]NO[/red]'}")
    return all_slas_met


if __name__ == "__main__":
    sys.exit(0 if run_all_benchmarks() else 1)
