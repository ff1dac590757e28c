"""Benchmark: batched braidword evaluation."""

import numpy as np
import pytest

from anyon_compiler.anyons import AnyonModel, evaluate_codes, one_qubit_generators
from benchmarks.config import BENCHMARK_LEVEL
from benchmarks.stats import calc_stats, time_call


class EvaluationBenchmark:
    """Evaluate a fixed batch of random one-qubit words."""

    def __init__(self, n_words: int = 100_000, length: int = 20, level: int = BENCHMARK_LEVEL):
        gens = one_qubit_generators(AnyonModel(level)).with_inverses()
        self.stack = gens.stack
        self.codes = np.random.default_rng(0).integers(0, gens.alphabet_size, size=(n_words, length))

    def run(self) -> dict:
        results = time_call(lambda: evaluate_codes(self.codes, self.stack))
        return calc_stats(results, "evaluate_batch", words=len(self.codes))


@pytest.mark.benchmark
def test_evaluation_benchmark():
    """Run the batched evaluation benchmark."""
    results = EvaluationBenchmark().run()
    print(f"\nEvaluation: mean {results['mean_ms']:.2f}ms over {results['words']} words")
    assert results["sla_met"], "Batched evaluation exceeded SLA"
