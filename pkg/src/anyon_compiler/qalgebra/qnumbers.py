"""q-integers, q-factorials and exact q-exponents at q = exp(2πi/(k+2))."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from anyon_compiler.exceptions import InadmissibleLabelsError, InvalidLevelError

# Twice the topological spin: label 1 is spin 1/2, label 2 is spin 1.
DoubledSpin = int


@dataclass(frozen=True, order=True)
class QExponent:
    """Exponent of q held in exact quarter units.

    ``QExponent(n)`` stands for q**(n/4), so its phase is
    exp(2πi · n / (4(k+2))). Arithmetic stays in integers until ``phase``.
    """

    numerator: int

    def __add__(self, other: QExponent) -> QExponent:
        return QExponent(self.numerator + other.numerator)

    def __neg__(self) -> QExponent:
        return QExponent(-self.numerator)

    def phase(self, level: int) -> complex:
        """Evaluate q**(numerator/4) at level ``level``."""
        # Reduce modulo the period 4(k+2) so the float angle stays small.
        period = 4 * (level + 2)
        angle = 2.0 * math.pi * (self.numerator % period) / period
        return complex(math.cos(angle), math.sin(angle))


def _check_level(k: int) -> None:
    if k < 1:
        raise InvalidLevelError(f"level must be >= 1, got {k}", details={"k": k})


def q_integer(n: int, k: int) -> float:
    """Return [n]_q = sin(nπ/(k+2)) / sin(π/(k+2))."""
    _check_level(k)
    step = math.pi / (k + 2)
    return math.sin(n * step) / math.sin(step)


def q_factorial(n: int, k: int) -> float:
    """Return [n]_q! = [1]_q [2]_q ... [n]_q, defined for 0 <= n <= k+1."""
    _check_level(k)
    if n < 0 or n > k + 1:
        raise InadmissibleLabelsError(
            f"q-factorial argument {n} outside [0, {k + 1}] at level {k}",
            details={"n": n, "k": k},
        )
    return float(math.prod(q_integer(m, k) for m in range(1, n + 1)))


def deformation_parameter(k: int) -> complex:
    """q = exp(2πi/(k+2))."""
    _check_level(k)
    return complex(np.exp(2j * np.pi / (k + 2)))
