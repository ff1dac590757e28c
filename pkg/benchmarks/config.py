"""Benchmark Configuration."""

import os

# Benchmark settings
BENCHMARK_ITERATIONS = int(os.getenv("BENCHMARK_ITERATIONS", "5"))
WARMUP_ITERATIONS = int(os.getenv("WARMUP_ITERATIONS", "1"))
BENCHMARK_LEVEL = int(os.getenv("BENCHMARK_LEVEL", "5"))

# Target SLAs (in seconds)
SLA_TARGETS = {
    "evaluate_batch": 0.5,          # 10^5 words of length 20, 2x2
    "exhaustive_two_qubit": 30.0,   # length 8, five generators
    "ga_one_qubit": 20.0,           # default GA settings, length 30
}

# Output configuration
RESULTS_DIR = os.getenv("RESULTS_DIR", "benchmark-results")
