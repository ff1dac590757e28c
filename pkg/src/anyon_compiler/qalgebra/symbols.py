"""Quantum 6j symbols, F-symbols and R-symbols of SU(2)_k.

All labels are doubled spins. Formulas that need true spins halve sums at
evaluation time; admissibility guarantees every halved sum is integral.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Callable
from functools import lru_cache
from typing import TypeVar

import structlog

from anyon_compiler.exceptions import InadmissibleLabelsError, InvalidLevelError
from anyon_compiler.qalgebra.qnumbers import DoubledSpin, QExponent, q_factorial, q_integer

logger = structlog.get_logger(__name__)

T = TypeVar("T")


def is_admissible(j1: DoubledSpin, j2: DoubledSpin, j3: DoubledSpin, k: int) -> bool:
    """Truncated fusion rule: j3 appears in j1 ⊗ j2 at level k."""
    if any(j < 0 or j > k for j in (j1, j2, j3)):
        return False
    if (j1 + j2 + j3) % 2:
        return False
    return abs(j1 - j2) <= j3 <= min(j1 + j2, 2 * k - j1 - j2)


def fusion_channels(j1: DoubledSpin, j2: DoubledSpin, k: int) -> list[DoubledSpin]:
    """All admissible outcomes of j1 ⊗ j2, ascending."""
    return [j for j in range(abs(j1 - j2), k + 1, 2) if is_admissible(j1, j2, j, k)]


def _require_admissible(j1: int, j2: int, j3: int, k: int) -> None:
    if not is_admissible(j1, j2, j3, k):
        raise InadmissibleLabelsError(
            f"({j1}, {j2}, {j3}) is not admissible at level {k}",
            details={"labels": [j1, j2, j3], "k": k},
        )


def triangle_delta(j1: DoubledSpin, j2: DoubledSpin, j3: DoubledSpin, k: int) -> float:
    """Δ(j1, j2, j3) as a square-root ratio of q-factorials."""
    _require_admissible(j1, j2, j3, k)
    numerator = (
        q_factorial((-j1 + j2 + j3) // 2, k)
        * q_factorial((j1 - j2 + j3) // 2, k)
        * q_factorial((j1 + j2 - j3) // 2, k)
    )
    return math.sqrt(numerator / q_factorial((j1 + j2 + j3) // 2 + 1, k))


def q_six_j(
    j1: DoubledSpin,
    j2: DoubledSpin,
    j12: DoubledSpin,
    j3: DoubledSpin,
    j: DoubledSpin,
    j23: DoubledSpin,
    k: int,
) -> float:
    """Quantum 6j symbol {j1 j2 j12; j3 j j23}_q; 0 for inadmissible input."""
    triads = ((j1, j2, j12), (j12, j3, j), (j2, j3, j23), (j1, j23, j))
    if not all(is_admissible(*t, k) for t in triads):
        return 0.0

    lower = [sum(t) // 2 for t in triads]
    upper = [
        (j1 + j2 + j3 + j) // 2,
        (j1 + j12 + j3 + j23) // 2,
        (j2 + j12 + j + j23) // 2,
    ]
    # [z+1]_q! vanishes once z+1 reaches k+2, so z stops at k.
    z_min, z_max = max(lower), min(min(upper), k)

    total = 0.0
    for z in range(z_min, z_max + 1):
        denominator = math.prod(q_factorial(z - a, k) for a in lower) * math.prod(
            q_factorial(b - z, k) for b in upper
        )
        total += (-1) ** z * q_factorial(z + 1, k) / denominator

    prefactor = math.prod(triangle_delta(*t, k) for t in triads)
    return prefactor * total


def f_symbol(
    j1: DoubledSpin,
    j2: DoubledSpin,
    j3: DoubledSpin,
    j: DoubledSpin,
    j12: DoubledSpin,
    j23: DoubledSpin,
    k: int,
) -> float:
    """[F^{j1 j2 j3}_j]_{j12, j23}; 0 when any vertex is inadmissible."""
    six_j = q_six_j(j1, j2, j12, j3, j, j23, k)
    if six_j == 0.0:
        return 0.0
    sign = -1.0 if ((j1 + j2 + j3 + j) // 2) % 2 else 1.0
    return sign * math.sqrt(q_integer(j12 + 1, k) * q_integer(j23 + 1, k)) * six_j


def r_exponent(j1: DoubledSpin, j2: DoubledSpin, j: DoubledSpin) -> QExponent:
    """q-exponent (1/2)[j(j+1) - j1(j1+1) - j2(j2+1)] in quarter units."""
    # With doubled labels the exponent is N/8 for N below; N is always even.
    n = j * (j + 2) - j1 * (j1 + 2) - j2 * (j2 + 2)
    return QExponent(n // 2)


def r_symbol(j1: DoubledSpin, j2: DoubledSpin, j: DoubledSpin, k: int) -> complex:
    """R^{j1 j2}_j = (-1)^(j - j1 - j2) q^(...), spins in true units for the sign."""
    _require_admissible(j1, j2, j, k)
    sign = -1.0 if ((j - j1 - j2) // 2) % 2 else 1.0
    return sign * r_exponent(j1, j2, j).phase(k)


def f_matrix(
    j1: DoubledSpin, j2: DoubledSpin, j3: DoubledSpin, j: DoubledSpin, k: int
) -> tuple[list[DoubledSpin], list[DoubledSpin], list[list[float]]]:
    """F^{j1 j2 j3}_j over its admissible channels.

    Returns (row labels j12, column labels j23, matrix rows).
    """
    rows = [x for x in fusion_channels(j1, j2, k) if is_admissible(x, j3, j, k)]
    cols = [y for y in fusion_channels(j2, j3, k) if is_admissible(j1, y, j, k)]
    matrix = [[f_symbol(j1, j2, j3, j, x, y, k) for y in cols] for x in rows]
    return rows, cols, matrix


class SymbolTable:
    """Per-level memo of q-integers, q-factorials, F- and R-symbols.

    Values are computed outside the lock and published with ``setdefault``,
    so concurrent readers always see the first (bit-identical) result.
    """

    def __init__(self, level: int):
        if level < 3:
            raise InvalidLevelError(f"anyon models need k >= 3, got {level}", details={"k": level})
        self.level = level
        self._lock = threading.Lock()
        self._q_integers: dict[tuple[int, ...], float] = {}
        self._q_factorials: dict[tuple[int, ...], float] = {}
        self._f_symbols: dict[tuple[int, ...], float] = {}
        self._r_symbols: dict[tuple[int, ...], complex] = {}

    def _memo(self, cache: dict[tuple[int, ...], T], key: tuple[int, ...], compute: Callable[[], T]) -> T:
        if key in cache:
            return cache[key]
        value = compute()
        with self._lock:
            return cache.setdefault(key, value)

    def q_integer(self, n: int) -> float:
        return self._memo(self._q_integers, (n,), lambda: q_integer(n, self.level))

    def q_factorial(self, n: int) -> float:
        return self._memo(self._q_factorials, (n,), lambda: q_factorial(n, self.level))

    def f_symbol(
        self,
        j1: DoubledSpin,
        j2: DoubledSpin,
        j3: DoubledSpin,
        j: DoubledSpin,
        j12: DoubledSpin,
        j23: DoubledSpin,
    ) -> float:
        key = (j1, j2, j3, j, j12, j23)
        return self._memo(self._f_symbols, key, lambda: f_symbol(*key, self.level))

    def r_symbol(self, j1: DoubledSpin, j2: DoubledSpin, j: DoubledSpin) -> complex:
        key = (j1, j2, j)
        return self._memo(self._r_symbols, key, lambda: r_symbol(*key, self.level))

    def __len__(self) -> int:
        return len(self._f_symbols) + len(self._r_symbols)


@lru_cache(maxsize=None)
def symbol_table(level: int) -> SymbolTable:
    """Shared symbol table for ``level``."""
    logger.debug("symbol_table_created", level=level)
    return SymbolTable(level)
