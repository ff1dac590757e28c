"""Makhlin local invariants and distances to local equivalence classes.

Two-qubit gates related by one-qubit dressings share (g1, g2, g3). The
invariants come from m = U_Bᵀ U_B in the Bell basis, normalized by det U
of the untransformed matrix.
"""

from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict

from anyon_compiler.exceptions import DimensionMismatchError, SingularMatrixError
from anyon_compiler.metrics.gates import CNOT, SWAP

SINGULAR_DET = 1e-6

BELL = np.array(
    [[1, 0, 0, 1j], [0, 1j, 1, 0], [0, 1j, -1, 0], [1, 0, 0, -1j]], dtype=np.complex128
) / np.sqrt(2)
BELL.setflags(write=False)


class LocalInvariants(BaseModel):
    """Makhlin invariants (g1, g2, g3)."""

    model_config = ConfigDict(frozen=True)

    g1: float
    g2: float
    g3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.g1, self.g2, self.g3])


class ClassName(str, Enum):
    CNOT = "CNOT"
    SWAP = "SWAP"
    CUSTOM = "custom"


class ClassTarget(BaseModel):
    """A local equivalence class given by its invariants."""

    model_config = ConfigDict(frozen=True, use_enum_values=True)

    name: ClassName
    g_target: LocalInvariants

    @classmethod
    def from_gate(cls, gate: np.ndarray) -> ClassTarget:
        return cls(name=ClassName.CUSTOM, g_target=local_invariants(gate))


def bell_transform(u: np.ndarray) -> np.ndarray:
    """U_B = Q† U Q; broadcasts over leading axes."""
    u = np.asarray(u, dtype=np.complex128)
    return BELL.conj().T @ u @ BELL


def local_invariants_batch(a: np.ndarray) -> np.ndarray:
    """(N, 4, 4) -> (N, 3) invariants; rows with |det A| <= 1e-6 are inf."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 3 or a.shape[1:] != (4, 4):
        raise DimensionMismatchError(
            f"local invariants need (N, 4, 4), got {a.shape}", details={"shape": list(a.shape)}
        )
    ub = bell_transform(a)
    m = np.swapaxes(ub, 1, 2) @ ub
    det = np.linalg.det(a)
    singular = np.abs(det) <= SINGULAR_DET
    det = np.where(singular, 1.0, det)

    tr = np.trace(m, axis1=1, axis2=2)
    tr_sq = np.trace(m @ m, axis1=1, axis2=2)
    g12 = tr**2 / (16 * det)
    g3 = (tr**2 - tr_sq) / (4 * det)

    out = np.stack([g12.real, g12.imag, g3.real], axis=1)
    out[singular] = np.inf
    return out


def local_invariants(a: np.ndarray) -> LocalInvariants:
    """Invariants of one 4×4 matrix; raises when A is near-singular."""
    a = np.asarray(getattr(a, "entries", a), dtype=np.complex128)
    if a.shape != (4, 4):
        raise DimensionMismatchError(f"local invariants need 4x4, got {a.shape}")
    det = complex(np.linalg.det(a))
    if abs(det) <= SINGULAR_DET:
        raise SingularMatrixError(
            "local invariants are undefined for a near-singular matrix",
            details={"abs_det": abs(det)},
        )
    g1, g2, g3 = local_invariants_batch(a[None])[0]
    return LocalInvariants(g1=float(g1), g2=float(g2), g3=float(g3))


CNOT_CLASS = ClassTarget(name=ClassName.CNOT, g_target=LocalInvariants(g1=0.0, g2=0.0, g3=1.0))
SWAP_CLASS = ClassTarget(name=ClassName.SWAP, g_target=LocalInvariants(g1=-1.0, g2=0.0, g3=-3.0))

CLASS_TARGETS: dict[str, ClassTarget] = {"CNOT": CNOT_CLASS, "SWAP": SWAP_CLASS}
CLASS_GATES: dict[str, np.ndarray] = {"CNOT": CNOT, "SWAP": SWAP}


def class_distance_batch(a: np.ndarray, target: ClassTarget) -> np.ndarray:
    """Σ (g_i(A) - g_i(target))² per matrix; inf where A is near-singular."""
    g = local_invariants_batch(a)
    return np.sum((g - target.g_target.as_array()) ** 2, axis=1)


def class_distance(a: np.ndarray, target: ClassTarget) -> float:
    """Squared distance of A's invariants from the class invariants."""
    g = local_invariants(a)
    return float(np.sum((g.as_array() - target.g_target.as_array()) ** 2))
