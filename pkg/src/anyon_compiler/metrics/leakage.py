"""Leakage out of the computational subspace."""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from anyon_compiler.exceptions import DimensionMismatchError


class LeakageReport(BaseModel):
    """|M11| of the NC element and dU = Tr sqrt(a†a), a = A†A - I."""

    model_config = ConfigDict(frozen=True)

    m11: float = Field(ge=0.0)
    dU: float = Field(ge=0.0)  # noqa: N815


def leakage_metrics_batch(bs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(N, 5, 5) -> (m11, dU), each of shape (N,)."""
    bs = np.asarray(bs, dtype=np.complex128)
    if bs.ndim != 3 or bs.shape[1:] != (5, 5):
        raise DimensionMismatchError(
            f"leakage metrics need (N, 5, 5), got {bs.shape}", details={"shape": list(bs.shape)}
        )
    m11 = np.abs(bs[:, 0, 0])
    a = bs[:, 1:, 1:]
    gram = np.swapaxes(a.conj(), 1, 2) @ a - np.eye(4)
    # gram is Hermitian, so its singular values are |eigenvalues|.
    d_u = np.abs(np.linalg.eigvalsh(gram)).sum(axis=1)
    return m11, d_u


def leakage_metrics(b: object) -> LeakageReport:
    entries = np.asarray(getattr(b, "entries", b), dtype=np.complex128)
    m11, d_u = leakage_metrics_batch(entries[None])
    return LeakageReport(m11=float(m11[0]), dU=float(d_u[0]))
