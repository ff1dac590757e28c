"""Anyon model, braid matrices and generator sets."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property

import numpy as np
import structlog

from anyon_compiler.anyons.braidword import Braidword, alphabet
from anyon_compiler.exceptions import DimensionMismatchError, InvalidLevelError
from anyon_compiler.qalgebra import SymbolTable, deformation_parameter, symbol_table

logger = structlog.get_logger(__name__)

ONE_QUBIT_BASIS = ("|0>", "|1>")
TWO_QUBIT_BASIS = ("NC", "|00>", "|01>", "|10>", "|11>")


class Encoding(str, Enum):
    """Qubit encodings in the fusion space of identical anyons."""
    ONE_QUBIT = "one_qubit"
    TWO_QUBIT = "two_qubit"

    @property
    def n_anyons(self) -> int:
        return 3 if self is Encoding.ONE_QUBIT else 6

    @property
    def dim(self) -> int:
        return 2 if self is Encoding.ONE_QUBIT else 5

    @property
    def basis(self) -> tuple[str, ...]:
        return ONE_QUBIT_BASIS if self is Encoding.ONE_QUBIT else TWO_QUBIT_BASIS


@dataclass(frozen=True)
class AnyonModel:
    """SU(2)_k at level ``level``.

    Level 4 is constructible, but braiding alone is not universal there.
    """

    level: int

    def __post_init__(self) -> None:
        if self.level < 3:
            raise InvalidLevelError(
                f"anyon models need k >= 3, got {self.level}", details={"k": self.level}
            )
        if self.level == 4:
            logger.warning("non_universal_level", k=self.level)

    @property
    def symbol_table(self) -> SymbolTable:
        return symbol_table(self.level)

    @property
    def q(self) -> complex:
        return deformation_parameter(self.level)

    @property
    def is_braiding_universal(self) -> bool:
        return self.level != 4

    @property
    def name(self) -> str:
        return f"SU(2)_{self.level}"


@dataclass(frozen=True, eq=False)
class BraidMatrix:
    """Dense unitary acting on an encoded fusion space in a declared basis order."""

    entries: np.ndarray
    basis_order: tuple[str, ...]

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape != (len(self.basis_order), len(self.basis_order)):
            raise DimensionMismatchError(
                f"matrix shape {entries.shape} does not fit basis {self.basis_order}",
                details={"shape": list(entries.shape)},
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.basis_order)

    @property
    def dagger(self) -> BraidMatrix:
        return BraidMatrix(self.entries.conj().T, self.basis_order)

    def unitarity_residual(self) -> float:
        """Operator norm of U†U - I."""
        gram = self.entries.conj().T @ self.entries
        return float(np.linalg.norm(gram - np.eye(self.dim), 2))

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return self.unitarity_residual() <= tol


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Ordered elementary braiding matrices σ_1..σ_n of one encoding.

    With ``include_inverses`` the search alphabet is σ_1..σ_n, σ_1⁻¹..σ_n⁻¹.
    """

    matrices: tuple[BraidMatrix, ...]
    level: int
    encoding: Encoding
    include_inverses: bool = False
    anyon: int = field(default=1)

    @property
    def n_generators(self) -> int:
        return len(self.matrices)

    @property
    def dim(self) -> int:
        return self.matrices[0].dim

    @property
    def basis_order(self) -> tuple[str, ...]:
        return self.matrices[0].basis_order

    @property
    def alphabet(self) -> str:
        letters = alphabet(self.n_generators)
        return letters if self.include_inverses else letters[: self.n_generators]

    @property
    def alphabet_size(self) -> int:
        return len(self.alphabet)

    @cached_property
    def stack(self) -> np.ndarray:
        """Alphabet matrices as one (A, d, d) array, indexed by letter code."""
        mats = [m.entries for m in self.matrices]
        if self.include_inverses:
            mats += [m.entries.conj().T for m in self.matrices]
        out = np.stack(mats)
        out.setflags(write=False)
        return out

    def with_inverses(self) -> GeneratorSet:
        return replace(self, include_inverses=True)

    def without_inverses(self) -> GeneratorSet:
        return replace(self, include_inverses=False)

    def matrix(self, letter: int) -> np.ndarray:
        """Matrix of a signed generator index."""
        if letter == 0 or abs(letter) > self.n_generators:
            raise DimensionMismatchError(
                f"generator index {letter} outside 1..{self.n_generators}",
                details={"letter": letter},
            )
        m = self.matrices[abs(letter) - 1].entries
        return m if letter > 0 else m.conj().T

    def parse(self, text: str) -> Braidword:
        return Braidword.parse(text, self.n_generators)

    def __len__(self) -> int:
        return self.n_generators
