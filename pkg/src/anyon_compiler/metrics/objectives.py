"""Objective closures shared by the search engines.

An objective maps a stack of word matrices (N, d, d) to N non-negative
scores; lower is better and 0 is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from anyon_compiler.metrics.distance import phase_invariant_distance_batch
from anyon_compiler.metrics.invariants import ClassTarget, class_distance_batch
from anyon_compiler.metrics.leakage import leakage_metrics_batch


class Objective(Protocol):
    name: str
    dim: int

    def __call__(self, us: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True, eq=False)
class GateObjective:
    """Phase-invariant distance to a fixed gate."""

    target: np.ndarray
    name: str = "custom"
    dim: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "dim", int(np.asarray(self.target).shape[0]))

    def __call__(self, us: np.ndarray) -> np.ndarray:
        return phase_invariant_distance_batch(self.target, us)

    def score(self, u: np.ndarray) -> float:
        return float(self(np.asarray(u)[None])[0])


@dataclass(frozen=True, eq=False)
class ClassObjective:
    """Distance of the computational block to a local equivalence class.

    A positive ``leakage_weight`` adds λ·dU.
    """

    target: ClassTarget
    leakage_weight: float = 0.0
    dim: int = 5

    @property
    def name(self) -> str:
        return str(self.target.name)

    def __call__(self, bs: np.ndarray) -> np.ndarray:
        bs = np.asarray(bs)
        score = class_distance_batch(bs[:, 1:, 1:], self.target)
        if self.leakage_weight:
            _, d_u = leakage_metrics_batch(bs)
            score = score + self.leakage_weight * d_u
        return score

    def score(self, b: np.ndarray) -> float:
        return float(self(np.asarray(b)[None])[0])


def gate_objective(target: np.ndarray, name: str = "custom") -> GateObjective:
    return GateObjective(np.asarray(target, dtype=np.complex128), name)


def class_objective(target: ClassTarget, leakage_weight: float = 0.0) -> ClassObjective:
    return ClassObjective(target, leakage_weight)
