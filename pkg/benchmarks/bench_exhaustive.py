"""Benchmark: exhaustive two-qubit search."""

import pytest

from anyon_compiler.anyons import AnyonModel, two_qubit_generators
from anyon_compiler.metrics import CLASS_TARGETS, class_objective
from anyon_compiler.search import candidate_count, exhaustive_search
from benchmarks.config import BENCHMARK_LEVEL
from benchmarks.stats import calc_stats, time_call


class ExhaustiveBenchmark:
    """SWAP-class search over every two-qubit word of one length."""

    def __init__(self, length: int = 8, threads: int = 1, level: int = BENCHMARK_LEVEL):
        self.gens = two_qubit_generators(AnyonModel(level))
        self.objective = class_objective(CLASS_TARGETS["SWAP"])
        self.length = length
        self.threads = threads
        self.best = None

    def _search(self) -> None:
        self.best = exhaustive_search(self.gens, self.length, self.objective, threads=self.threads)

    def run(self, iterations: int = 1) -> dict:
        results = time_call(self._search, iterations)
        return calc_stats(
            results,
            "exhaustive_two_qubit",
            candidates=candidate_count(self.gens.alphabet_size, self.length, False),
            threads=self.threads,
            distance=self.best.distance if self.best else None,
        )


@pytest.mark.benchmark
@pytest.mark.slow
def test_exhaustive_benchmark():
    """Run the exhaustive search benchmark."""
    results = ExhaustiveBenchmark().run()
    print(f"\nExhaustive: {results['candidates']} candidates in {results['mean_ms']:.0f}ms")
    assert results["sla_met"], "Exhaustive search exceeded SLA"
