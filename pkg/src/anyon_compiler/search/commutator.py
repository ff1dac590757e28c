"""Balanced group-commutator decomposition of SU(2) rotations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from anyon_compiler.exceptions import DegenerateCommutatorError, NumericalError
from anyon_compiler.metrics import I2, rotation

DET_TOLERANCE = 1e-10
IDENTITY_TOLERANCE = 1e-14

X_AXIS = np.array([1.0, 0.0, 0.0])
Y_AXIS = np.array([0.0, 1.0, 0.0])


@dataclass(frozen=True, eq=False)
class GcPair:
    """V, W with V W V† W† equal to the decomposed rotation."""

    v: np.ndarray
    w: np.ndarray
    theta: float
    phi: float

    def commutator(self) -> np.ndarray:
        return self.v @ self.w @ self.v.conj().T @ self.w.conj().T


def to_bloch(u: np.ndarray) -> tuple[np.ndarray, float]:
    """Unnormalized rotation axis and angle of U = cos(θ/2) I - i sin(θ/2) n·σ."""
    a0 = (u[0, 0] + u[1, 1]).real / 2
    axis = np.array(
        [
            -(u[0, 1] + u[1, 0]).imag / 2,
            (u[1, 0] - u[0, 1]).real / 2,
            (u[1, 1] - u[0, 0]).imag / 2,
        ]
    )
    return axis, float(2 * np.arctan2(np.linalg.norm(axis), a0))


def commutator_angle(theta: float) -> float:
    """Root φ of sin(θ/2) = 2 sin²(φ/2) sqrt(1 - sin⁴(φ/2)) on [0, π]."""
    # sqrt((1 - cos(θ/2)) / 2) = sin(θ/4), kept in half-angle form for small θ.
    return float(2 * np.arcsin(np.sqrt(np.sin(theta / 4))))


def _aligning_rotation(source: np.ndarray, target: np.ndarray) -> np.ndarray:
    """SU(2) element whose Bloch rotation carries unit ``source`` onto unit ``target``."""
    cross = np.cross(source, target)
    dot = float(source @ target)
    if np.linalg.norm(cross) < 1e-12:
        if dot > 0:
            return I2.copy()
        # Antiparallel: half turn about any perpendicular axis.
        helper = X_AXIS if abs(source[0]) < 0.9 else Y_AXIS
        return rotation(np.cross(source, helper), np.pi)
    return rotation(cross, float(np.arctan2(np.linalg.norm(cross), dot)))


def gc_decompose(delta: np.ndarray) -> GcPair:
    """Write ``delta`` as V W V† W† with V, W rotations by the same angle φ."""
    delta = np.asarray(delta, dtype=np.complex128)
    if abs(np.linalg.det(delta) - 1) > DET_TOLERANCE:
        raise NumericalError(
            "group-commutator decomposition needs a determinant-1 matrix",
            details={"det": str(np.linalg.det(delta))},
        )
    if np.linalg.norm(delta + I2) <= DET_TOLERANCE:
        raise DegenerateCommutatorError("cannot decompose -I: its rotation axis is undefined")

    axis, theta = to_bloch(delta)
    if np.linalg.norm(axis) <= IDENTITY_TOLERANCE:
        return GcPair(I2.copy(), I2.copy(), 0.0, 0.0)

    phi = commutator_angle(theta)
    v0 = rotation(X_AXIS, phi)
    w0 = rotation(Y_AXIS, phi)
    c_axis, _ = to_bloch(v0 @ w0 @ v0.conj().T @ w0.conj().T)
    s = _aligning_rotation(c_axis / np.linalg.norm(c_axis), axis / np.linalg.norm(axis))
    return GcPair(s @ v0 @ s.conj().T, s @ w0 @ s.conj().T, theta, phi)
