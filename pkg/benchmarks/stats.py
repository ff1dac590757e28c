"""Timing helpers shared by the benchmarks."""

import statistics
import time
from collections.abc import Callable
from typing import Any

from benchmarks.config import BENCHMARK_ITERATIONS, SLA_TARGETS, WARMUP_ITERATIONS


def time_call(fn: Callable[[], Any], iterations: int = BENCHMARK_ITERATIONS) -> list[float]:
    """Wall times of ``iterations`` calls after the warmup calls."""
    for _ in range(WARMUP_ITERATIONS):
        fn()
    results = []
    for _ in range(iterations):
        start = time.perf_counter()
        fn()
        results.append(time.perf_counter() - start)
    return results


def calc_stats(results: list[float], benchmark: str, **extra: Any) -> dict[str, Any]:
    sorted_results = sorted(results)
    worst = sorted_results[-1]
    return {
        "benchmark": benchmark,
        "iterations": len(results),
        "mean_ms": statistics.mean(results) * 1000,
        "min_ms": sorted_results[0] * 1000,
        "max_ms": worst * 1000,
        "sla_target_ms": SLA_TARGETS[benchmark] * 1000,
        "sla_met": worst < SLA_TARGETS[benchmark],
        **extra,
    }
