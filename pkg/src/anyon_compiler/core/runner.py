"""Compile runs and sweeps: the layer the CLI drives."""

from __future__ import annotations

import csv
import json
import os
import time
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

import numpy as np
import structlog

from anyon_compiler.anyons import AnyonModel, Encoding, GeneratorSet, generators
from anyon_compiler.core.config import CompilerConfig
from anyon_compiler.exceptions import CompilerError, InvalidRunConfigError
from anyon_compiler.metrics import (
    CLASS_TARGETS,
    ClassTarget,
    GateObjective,
    Objective,
    class_objective,
    gate_objective,
)
from anyon_compiler.metrics.gates import ONE_QUBIT_GATES
from anyon_compiler.models import CompilationResult, Engine, RunConfig, SweepRow, SweepSpec, TargetName
from anyon_compiler.search import exhaustive_search, ga_search, solovay_kitaev

logger = structlog.get_logger(__name__)


def resolve_threads(threads: int | None) -> int:
    """0 or None means one worker per CPU."""
    if not threads:
        return os.cpu_count() or 1
    return threads


def load_custom_target(path: Path, encoding: Encoding) -> np.ndarray:
    """Read a complex matrix stored with numpy.save."""
    matrix = np.asarray(np.load(path), dtype=np.complex128)
    expected = (2, 2) if encoding is Encoding.ONE_QUBIT else (4, 4)
    if matrix.shape != expected:
        raise InvalidRunConfigError(
            f"custom target {path} has shape {matrix.shape}, {encoding.value} needs {expected}",
            details={"path": str(path)},
        )
    return matrix


def build_objective(run: RunConfig) -> Objective:
    if run.encoding is Encoding.ONE_QUBIT:
        if run.target is TargetName.CUSTOM:
            return gate_objective(load_custom_target(run.custom_target_path, run.encoding))
        return gate_objective(ONE_QUBIT_GATES[run.target.value], run.target.value)

    if run.target is TargetName.CUSTOM:
        target = ClassTarget.from_gate(load_custom_target(run.custom_target_path, run.encoding))
    else:
        target = CLASS_TARGETS[run.target.value]
    return class_objective(target, run.leakage_weight)


def build_generators(run: RunConfig) -> GeneratorSet:
    gens = generators(AnyonModel(run.level), run.encoding, run.anyon)
    return gens.with_inverses() if run.include_inverses else gens


def compile_run(run: RunConfig, config: CompilerConfig, threads: int = 1) -> CompilationResult:
    """Run the engine selected by ``run``."""
    gens = build_generators(run)
    objective = build_objective(run)
    logger.info(
        "compile_started",
        k=run.level,
        encoding=run.encoding.value,
        target=run.target.value,
        engine=run.engine.value,
        seed=run.search.rng_seed,
    )
    if run.engine is Engine.EXHAUSTIVE:
        return exhaustive_search(
            gens,
            run.length,
            objective,
            max_candidates=config.exhaustive.max_candidates,
            suffix_length=config.exhaustive.suffix_length,
            threads=threads,
        )
    if run.engine is Engine.GA:
        return ga_search(gens, run.length, objective, run.search, threads=threads)
    assert isinstance(objective, GateObjective)
    return solovay_kitaev(objective.target, run.sk_level, gens, run.search, threads=threads)


def result_record(result: CompilationResult, run: RunConfig, include_timing: bool = False) -> dict[str, Any]:
    return result.to_record(
        include_timing=include_timing,
        model_k=run.level,
        encoding=run.encoding.value,
        target=run.target.value,
        seed=run.search.rng_seed,
        include_inverses=run.include_inverses,
    )


def write_result(record: dict[str, Any], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(record, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def _sweep_point(run: RunConfig, config: CompilerConfig) -> SweepRow:
    length = run.length if run.length is not None else run.search.base_length * 5 ** run.sk_level
    row = {
        "model_k": run.level,
        "encoding": run.encoding.value,
        "engine": run.engine.value,
        "length": length,
        "seed": run.search.rng_seed,
    }
    started = time.perf_counter()
    try:
        result = compile_run(run, config)
    except CompilerError as e:
        logger.warning("sweep_point_failed", error=e.message, code=e.code, **row)
        return SweepRow(**row, wall_ms=(time.perf_counter() - started) * 1000, error=e.code)
    leakage = result.leakage
    return SweepRow(
        **row,
        distance=result.distance,
        m11=leakage.m11 if leakage else None,
        dU=leakage.dU if leakage else None,
        wall_ms=result.wall_time * 1000,
    )


def iter_sweep(spec: SweepSpec, config: CompilerConfig, threads: int = 1) -> Iterator[SweepRow]:
    """Rows in (level, point, seed) order, whatever the worker count."""
    runs = spec.run_configs()
    logger.info("sweep_started", points=len(runs), threads=threads)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            yield from pool.map(lambda run: _sweep_point(run, config), runs)
    else:
        for run in runs:
            yield _sweep_point(run, config)


def format_cell(value: Any, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{precision}e}" if value and abs(value) < 1e-3 else f"{value:.{precision}f}"
    return str(value)


def run_sweep(spec: SweepSpec, config: CompilerConfig, out: Path, threads: int = 1) -> list[SweepRow]:
    """Write one CSV row per (point, seed) under the fixed header.

    Failed points keep empty metric cells; their error codes stay on the
    returned rows and in the `sweep_point_failed` log events.
    """
    out.parent.mkdir(parents=True, exist_ok=True)
    rows = []
    with open(out, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(SweepRow.CSV_HEADER)
        for row in iter_sweep(spec, config, threads):
            writer.writerow(
                [format_cell(getattr(row, name), config.output.precision) for name in SweepRow.CSV_HEADER]
            )
            rows.append(row)
    failed = sum(1 for r in rows if r.error)
    logger.info("sweep_finished", rows=len(rows), failed=failed, out=str(out))
    return rows
