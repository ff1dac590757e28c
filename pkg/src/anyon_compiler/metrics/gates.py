"""Standard target gates."""

from __future__ import annotations

import numpy as np


def _frozen(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


I2 = _frozen(np.eye(2))
I4 = _frozen(np.eye(4))
H = _frozen(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
T = _frozen(np.diag([1, np.exp(1j * np.pi / 4)]))
CNOT = _frozen(np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]))
SWAP = _frozen(np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]))

ONE_QUBIT_GATES: dict[str, np.ndarray] = {"H": H, "T": T, "I": I2}
TWO_QUBIT_GATES: dict[str, np.ndarray] = {"CNOT": CNOT, "SWAP": SWAP, "I": I4}


def rotation(axis: np.ndarray, angle: float) -> np.ndarray:
    """exp(-i angle/2 n·σ) for a unit Bloch axis n."""
    nx, ny, nz = np.asarray(axis, dtype=float) / np.linalg.norm(axis)
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return np.array(
        [[c - 1j * s * nz, -1j * s * nx - s * ny], [-1j * s * nx + s * ny, c + 1j * s * nz]],
        dtype=np.complex128,
    )
