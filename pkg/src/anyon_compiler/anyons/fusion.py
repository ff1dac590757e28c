"""Left-associated fusion chains of identical anyons.

A basis state of n anyons with label s is the path (x_1, ..., x_n) where
x_1 = s and x_{m+1} is a channel of x_m ⊗ s. The exchange σ_i of anyons i
and i+1 only touches x_i: σ_1 is diagonal in R-symbols, and for i > 1 the
block on x_i (with x_{i-1}, x_{i+1} fixed) is F · diag(R) · Fᵀ with
F = F^{x_{i-1} s s}_{x_{i+1}}.
"""

from __future__ import annotations

import numpy as np

from anyon_compiler.anyons.model import AnyonModel
from anyon_compiler.exceptions import InadmissibleLabelsError
from anyon_compiler.qalgebra import DoubledSpin, fusion_channels, is_admissible

FusionPath = tuple[DoubledSpin, ...]


def _check_anyon(model: AnyonModel, anyon: DoubledSpin) -> None:
    if not 1 <= anyon <= model.level:
        raise InadmissibleLabelsError(
            f"anyon label {anyon} outside 1..{model.level}",
            details={"anyon": anyon, "k": model.level},
        )


def fusion_chain_basis(
    model: AnyonModel, anyon: DoubledSpin, n: int, total: DoubledSpin
) -> list[FusionPath]:
    """All fusion paths of ``n`` anyons with overall charge ``total``, lexicographic."""
    _check_anyon(model, anyon)
    k = model.level
    paths: list[FusionPath] = [(anyon,)]
    for _ in range(n - 1):
        paths = [p + (x,) for p in paths for x in fusion_channels(p[-1], anyon, k)]
    return sorted(p for p in paths if p[-1] == total)


def fusion_chain_generator(
    model: AnyonModel, basis: list[FusionPath], anyon: DoubledSpin, i: int
) -> np.ndarray:
    """σ_i on ``basis`` (1-based ``i``), rows and columns in basis order."""
    n = len(basis[0])
    if not 1 <= i < n:
        raise InadmissibleLabelsError(
            f"generator index {i} outside 1..{n - 1}", details={"i": i, "n": n}
        )
    table = model.symbol_table
    k = model.level
    index = {p: m for m, p in enumerate(basis)}
    out = np.zeros((len(basis), len(basis)), dtype=np.complex128)

    for col, path in enumerate(basis):
        if i == 1:
            out[col, col] = table.r_symbol(anyon, anyon, path[1])
            continue
        left, x, right = path[i - 2], path[i - 1], path[i]
        channels = [y for y in fusion_channels(anyon, anyon, k) if is_admissible(left, y, right, k)]
        for x_new in fusion_channels(left, anyon, k):
            target = path[: i - 1] + (x_new,) + path[i:]
            row = index.get(target)
            if row is None:
                continue
            out[row, col] = sum(
                table.f_symbol(left, anyon, anyon, right, x, y)
                * table.r_symbol(anyon, anyon, y)
                * table.f_symbol(left, anyon, anyon, right, x_new, y)
                for y in channels
            )
    return out
