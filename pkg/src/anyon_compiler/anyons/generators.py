"""Elementary braiding matrices for the one- and two-qubit encodings.

One qubit lives in three anyons with total charge equal to the anyon label;
the intermediate channel of the first pair is the logical state. Two qubits
live in six anyons with total charge 0: four computational states where
each triple fuses back to the anyon label, plus one non-computational (NC)
state. The NC state is basis index 0.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import structlog

from anyon_compiler.anyons.fusion import FusionPath, fusion_chain_basis, fusion_chain_generator
from anyon_compiler.anyons.model import AnyonModel, BraidMatrix, Encoding, GeneratorSet
from anyon_compiler.exceptions import InadmissibleLabelsError

logger = structlog.get_logger(__name__)


def one_qubit_basis(model: AnyonModel, anyon: int = 1) -> list[FusionPath]:
    """Fusion paths (s, a, s) ordered by the logical label a."""
    basis = fusion_chain_basis(model, anyon, 3, anyon)
    if len(basis) != 2:
        raise InadmissibleLabelsError(
            f"anyon {anyon} at level {model.level} spans {len(basis)} states, not a qubit",
            details={"anyon": anyon, "k": model.level, "dim": len(basis)},
        )
    return basis


def two_qubit_basis(model: AnyonModel, anyon: int = 1) -> list[FusionPath]:
    """Six-anyon paths in the order NC, |00>, |01>, |10>, |11>.

    Path (s, a, b, c, s', 0) is computational when b = s; its qubits are
    a (anyons 1-2) and c (anyons 1-4, equal to the channel of anyons 5-6).
    """
    paths = fusion_chain_basis(model, anyon, 6, 0)
    computational = sorted((p for p in paths if p[2] == anyon), key=lambda p: (p[1], p[3]))
    leaked = [p for p in paths if p[2] != anyon]
    if len(computational) != 4 or len(leaked) != 1:
        raise InadmissibleLabelsError(
            f"anyon {anyon} at level {model.level} does not give a 4+1 two-qubit space",
            details={"anyon": anyon, "k": model.level, "dim": len(paths)},
        )
    return leaked + computational


def _direct_sum(scalar: complex, block: np.ndarray) -> np.ndarray:
    out = np.zeros((5, 5), dtype=np.complex128)
    out[0, 0] = scalar
    out[1:, 1:] = block
    return out


@lru_cache(maxsize=None)
def _one_qubit(level: int, anyon: int) -> GeneratorSet:
    model = AnyonModel(level)
    basis = one_qubit_basis(model, anyon)
    matrices = tuple(
        BraidMatrix(fusion_chain_generator(model, basis, anyon, i), Encoding.ONE_QUBIT.basis)
        for i in (1, 2)
    )
    logger.debug("generators_built", k=level, encoding="one_qubit", anyon=anyon)
    return GeneratorSet(matrices, level, Encoding.ONE_QUBIT, anyon=anyon)


@lru_cache(maxsize=None)
def _two_qubit(level: int, anyon: int) -> GeneratorSet:
    model = AnyonModel(level)
    basis = two_qubit_basis(model, anyon)
    s1, s2 = (m.entries for m in _one_qubit(level, anyon).matrices)
    eye = np.eye(2, dtype=np.complex128)
    nc = model.symbol_table.r_symbol(anyon, anyon, basis[0][1])

    sigma3 = fusion_chain_generator(model, basis, anyon, 3)
    raw = (
        _direct_sum(nc, np.kron(s1, eye)),
        _direct_sum(nc, np.kron(s2, eye)),
        sigma3,
        _direct_sum(nc, np.kron(eye, s2)),
        _direct_sum(nc, np.kron(eye, s1)),
    )
    matrices = tuple(BraidMatrix(m, Encoding.TWO_QUBIT.basis) for m in raw)
    logger.debug("generators_built", k=level, encoding="two_qubit", anyon=anyon)
    return GeneratorSet(matrices, level, Encoding.TWO_QUBIT, anyon=anyon)


def one_qubit_generators(model: AnyonModel, anyon: int = 1) -> GeneratorSet:
    """σ_1 = diag(R_0, R_2) and σ_2 = F⁻¹ diag(R_0, R_2) F on three anyons."""
    return _one_qubit(model.level, anyon)


def two_qubit_generators(model: AnyonModel, anyon: int = 1) -> GeneratorSet:
    """σ_1..σ_5 on six anyons.

    σ_1, σ_2, σ_4, σ_5 are NC ⊕ (one-qubit generator on one factor); σ_3
    couples NC with |11> and comes from the fusion chain.
    """
    return _two_qubit(model.level, anyon)


def generators(model: AnyonModel, encoding: Encoding | str, anyon: int = 1) -> GeneratorSet:
    if Encoding(encoding) is Encoding.ONE_QUBIT:
        return one_qubit_generators(model, anyon)
    return two_qubit_generators(model, anyon)


def fusion_chain_generators(model: AnyonModel, encoding: Encoding | str, anyon: int = 1) -> GeneratorSet:
    """Every σ_i straight from the fusion chain, without direct-sum shortcuts."""
    encoding = Encoding(encoding)
    if encoding is Encoding.ONE_QUBIT:
        basis = one_qubit_basis(model, anyon)
    else:
        basis = two_qubit_basis(model, anyon)
    matrices = tuple(
        BraidMatrix(fusion_chain_generator(model, basis, anyon, i), encoding.basis)
        for i in range(1, encoding.n_anyons)
    )
    return GeneratorSet(matrices, model.level, encoding, anyon=anyon)
