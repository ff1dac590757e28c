"""Assembling CompilationResult records."""

from __future__ import annotations

import time

from anyon_compiler.anyons import Braidword, GeneratorSet, evaluate_braidword
from anyon_compiler.exceptions import DimensionMismatchError
from anyon_compiler.metrics import Objective, leakage_metrics
from anyon_compiler.models import CompilationResult, Engine


def check_objective(gens: GeneratorSet, objective: Objective) -> None:
    if objective.dim != gens.dim:
        raise DimensionMismatchError(
            f"objective acts on dim {objective.dim}, generators on dim {gens.dim}",
            details={"objective": objective.name},
        )


def build_result(
    word: Braidword,
    gens: GeneratorSet,
    objective: Objective,
    engine: Engine,
    started: float,
    evaluations: int,
    sk_level: int | None = None,
) -> CompilationResult:
    """Re-evaluate ``word`` from scratch and package the metrics."""
    matrix = evaluate_braidword(word, gens).entries
    distance = float(objective(matrix[None])[0])
    leakage = leakage_metrics(matrix) if gens.dim == 5 else None
    return CompilationResult(
        word=word,
        distance=distance,
        leakage=leakage,
        engine=engine,
        sk_level=sk_level,
        wall_time=time.perf_counter() - started,
        evaluations=evaluations,
    )
