"""Custom exception classes and error handling."""

from __future__ import annotations

from typing import Any


class CompilerError(Exception):
    """Base exception for anyon-compiler."""

    code: str = "INTERNAL_ERROR"
    exit_code: int = 1

    def __init__(
        self,
        message: str,
        code: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        self.message = message
        self.code = code or self.code
        self.details = details
        super().__init__(message)

    def to_dict(self) -> dict[str, Any]:
        """Structured form for log events."""
        return {
            "code": self.code,
            "message": self.message,
            "details": self.details,
        }


# Usage errors (exit 1)

class UsageError(CompilerError):
    """Invalid user input."""
    code = "USAGE_ERROR"


class InvalidLevelError(UsageError):
    """Level k outside the supported range."""
    code = "INVALID_LEVEL"


class InadmissibleLabelsError(UsageError, ValueError):
    """Fusion labels violate the truncated fusion rule."""
    code = "INADMISSIBLE_LABELS"


class BraidwordParseError(UsageError, ValueError):
    """Braidword text contains letters outside the alphabet."""
    code = "BRAIDWORD_PARSE"


class DimensionMismatchError(UsageError, ValueError):
    """Matrix shapes do not fit the operation."""
    code = "DIMENSION_MISMATCH"


class InvalidRunConfigError(UsageError):
    """Run configuration is inconsistent (e.g. H target on two-qubit encoding)."""
    code = "INVALID_RUN_CONFIG"


# Numerical errors (exit 1)

class NumericalError(CompilerError):
    """Round-off beyond the tolerated clamp."""
    code = "NUMERICAL_ERROR"


class SingularMatrixError(NumericalError):
    """Local invariants are undefined for near-singular matrices."""
    code = "SINGULAR_MATRIX"


class DegenerateCommutatorError(NumericalError):
    """Group-commutator decomposition requested for -I."""
    code = "DEGENERATE_COMMUTATOR"


# Verification and budget (exit 2, 3)

class FixtureVerificationError(CompilerError):
    """One or more golden fixtures did not reproduce."""
    code = "FIXTURE_MISMATCH"
    exit_code = 2

    def __init__(self, offenders: list[str], details: dict[str, Any] | None = None):
        self.offenders = offenders
        super().__init__(
            f"{len(offenders)} fixture(s) failed: {', '.join(offenders)}",
            details=details,
        )


class SearchBudgetExceededError(CompilerError):
    """Exhaustive enumeration would exceed the candidate budget."""
    code = "SEARCH_BUDGET_EXCEEDED"
    exit_code = 3

    def __init__(self, candidates: int, budget: int):
        self.candidates = candidates
        self.budget = budget
        super().__init__(
            f"exhaustive search needs {candidates} candidates (budget {budget}); use GA",
            details={"candidates": candidates, "budget": budget},
        )
