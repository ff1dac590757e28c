"""Global-phase-invariant gate distance and SU(2) projection."""

from __future__ import annotations

import numpy as np
import structlog

from anyon_compiler.exceptions import DimensionMismatchError, NumericalError

logger = structlog.get_logger(__name__)

RADICAND_CLAMP = 1e-12


def _as_matrix(u: object) -> np.ndarray:
    return np.asarray(getattr(u, "entries", u), dtype=np.complex128)


def phase_invariant_distance_batch(u0: np.ndarray, us: np.ndarray) -> np.ndarray:
    """d = sqrt(1 - |Tr(U0 U†)| / dim) for every U in the (N, dim, dim) stack."""
    u0 = _as_matrix(u0)
    us = np.asarray(us, dtype=np.complex128)
    if us.ndim != 3 or us.shape[1:] != u0.shape:
        raise DimensionMismatchError(
            f"cannot compare {u0.shape} target with stack {us.shape}",
            details={"target": list(u0.shape), "stack": list(us.shape)},
        )
    overlap = np.abs(np.einsum("ij,nij->n", u0, us.conj()))
    radicand = 1.0 - overlap / u0.shape[0]
    worst = float(radicand.min(initial=0.0))
    if worst < -RADICAND_CLAMP:
        raise NumericalError(
            "negative radicand in phase-invariant distance; inputs are not unitary",
            details={"radicand": worst},
        )
    return np.sqrt(np.clip(radicand, 0.0, 1.0))


def phase_invariant_distance(u0: object, u: object) -> float:
    """Distance between two unitaries, blind to a global phase."""
    return float(phase_invariant_distance_batch(_as_matrix(u0), _as_matrix(u)[None])[0])


def su2_project_batch(us: np.ndarray) -> np.ndarray:
    """Divide each U by a square root of det U, picking the root with Re Tr >= 0."""
    us = np.asarray(us, dtype=np.complex128)
    roots = np.sqrt(np.linalg.det(us))
    out = us / roots[:, None, None]
    flip = np.trace(out, axis1=1, axis2=2).real < 0
    out[flip] *= -1
    return out


def su2_project(u: object) -> np.ndarray:
    """Special-unitary representative of U."""
    m = _as_matrix(u)
    if m.shape != (2, 2):
        raise DimensionMismatchError(f"su2_project needs 2x2, got {m.shape}")
    return su2_project_batch(m[None])[0]
