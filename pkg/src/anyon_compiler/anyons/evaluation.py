"""Braidword evaluation and block structure.

Composition convention: the leftmost letter acts first, so the word
w_1 w_2 ... w_n evaluates to M(w_n) ... M(w_2) M(w_1).
"""

from __future__ import annotations

import numpy as np

from anyon_compiler.anyons.braidword import Braidword
from anyon_compiler.anyons.model import BraidMatrix, GeneratorSet
from anyon_compiler.exceptions import DimensionMismatchError


def evaluate_braidword(word: Braidword, gens: GeneratorSet) -> BraidMatrix:
    """Ordered product of the word's generator matrices."""
    if word.n_generators != gens.n_generators:
        raise DimensionMismatchError(
            f"word over {word.n_generators} generators, set has {gens.n_generators}",
            details={"word": word.text},
        )
    u = np.eye(gens.dim, dtype=np.complex128)
    for letter in word:
        u = gens.matrix(letter) @ u
    return BraidMatrix(u, gens.basis_order)


def evaluate_codes(codes: np.ndarray, stack: np.ndarray, initial: np.ndarray | None = None) -> np.ndarray:
    """Evaluate a batch of words given as alphabet codes.

    ``codes`` is (N, L), ``stack`` is (A, d, d). ``initial`` (d, d) or
    (N, d, d) is applied before the first letter. Returns (N, d, d).
    """
    codes = np.atleast_2d(np.asarray(codes, dtype=np.int64))
    n, length = codes.shape
    d = stack.shape[-1]
    if initial is None:
        u = np.broadcast_to(np.eye(d, dtype=np.complex128), (n, d, d)).copy()
    else:
        u = np.broadcast_to(initial, (n, d, d)).astype(np.complex128, copy=True)
    for t in range(length):
        u = stack[codes[:, t]] @ u
    return u


def split_blocks(b: BraidMatrix | np.ndarray) -> tuple[complex, np.ndarray]:
    """Split a two-qubit matrix into the NC element and the 4×4 computational block."""
    entries = b.entries if isinstance(b, BraidMatrix) else np.asarray(b)
    if entries.shape != (5, 5):
        raise DimensionMismatchError(
            f"split_blocks needs a 5x5 matrix, got {entries.shape}",
            details={"shape": list(entries.shape)},
        )
    return complex(entries[0, 0]), np.array(entries[1:, 1:])


def braid_relation_residuals(gens: GeneratorSet) -> dict[str, float]:
    """Worst operator-norm violation of the Artin relations and of unitarity."""
    mats = [m.entries for m in gens.matrices]
    commute = 0.0
    yang_baxter = 0.0
    for i, a in enumerate(mats):
        for j in range(i + 2, len(mats)):
            b = mats[j]
            commute = max(commute, float(np.linalg.norm(a @ b - b @ a, 2)))
        if i + 1 < len(mats):
            b = mats[i + 1]
            yang_baxter = max(yang_baxter, float(np.linalg.norm(a @ b @ a - b @ a @ b, 2)))
    unitarity = max(m.unitarity_residual() for m in gens.matrices)
    return {"commute": commute, "yang_baxter": yang_baxter, "unitarity": unitarity}
