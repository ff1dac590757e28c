"""Benchmark: genetic search with the default settings."""

import pytest

from anyon_compiler.anyons import AnyonModel, one_qubit_generators
from anyon_compiler.metrics import H, gate_objective
from anyon_compiler.models import SearchConfig
from anyon_compiler.search import ga_search
from benchmarks.config import BENCHMARK_LEVEL
from benchmarks.stats import calc_stats, time_call


class GeneticBenchmark:
    """Hadamard search at length 30 with inverses."""

    def __init__(self, length: int = 30, level: int = BENCHMARK_LEVEL):
        self.gens = one_qubit_generators(AnyonModel(level)).with_inverses()
        self.objective = gate_objective(H, "H")
        self.length = length
        self.seed = 0
        self.distances: list[float] = []

    def _search(self) -> None:
        result = ga_search(self.gens, self.length, self.objective, SearchConfig(rng_seed=self.seed))
        self.distances.append(result.distance)
        self.seed += 1

    def run(self, iterations: int = 3) -> dict:
        results = time_call(self._search, iterations)
        return calc_stats(results, "ga_one_qubit", best_distance=min(self.distances))


@pytest.mark.benchmark
@pytest.mark.slow
def test_ga_benchmark():
    """Run the GA benchmark."""
    results = GeneticBenchmark().run()
    print(f"\nGA: mean {results['mean_ms']:.0f}ms, best distance {results['best_distance']:.3e}")
    assert results["sla_met"], "GA search exceeded SLA"
