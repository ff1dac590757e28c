"""Figures of merit for compiled braidwords."""

from anyon_compiler.metrics.distance import (
    phase_invariant_distance,
    phase_invariant_distance_batch,
    su2_project,
    su2_project_batch,
)
from anyon_compiler.metrics.gates import CNOT, H, I2, I4, SWAP, T, rotation
from anyon_compiler.metrics.invariants import (
    BELL,
    CLASS_GATES,
    CLASS_TARGETS,
    CNOT_CLASS,
    SWAP_CLASS,
    ClassName,
    ClassTarget,
    LocalInvariants,
    bell_transform,
    class_distance,
    class_distance_batch,
    local_invariants,
    local_invariants_batch,
)
from anyon_compiler.metrics.leakage import LeakageReport, leakage_metrics, leakage_metrics_batch
from anyon_compiler.metrics.objectives import (
    ClassObjective,
    GateObjective,
    Objective,
    class_objective,
    gate_objective,
)

__all__ = [
    "BELL",
    "CLASS_GATES",
    "CLASS_TARGETS",
    "CNOT",
    "CNOT_CLASS",
    "H",
    "I2",
    "I4",
    "SWAP",
    "SWAP_CLASS",
    "T",
    "ClassName",
    "ClassObjective",
    "ClassTarget",
    "GateObjective",
    "LeakageReport",
    "LocalInvariants",
    "Objective",
    "bell_transform",
    "class_distance",
    "class_distance_batch",
    "class_objective",
    "gate_objective",
    "leakage_metrics",
    "leakage_metrics_batch",
    "local_invariants",
    "local_invariants_batch",
    "phase_invariant_distance",
    "phase_invariant_distance_batch",
    "rotation",
    "su2_project",
    "su2_project_batch",
]
