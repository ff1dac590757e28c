"""Reproduction checks against the golden fixture file."""

from __future__ import annotations

import math
from collections.abc import Callable
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np
import structlog
import yaml
from pydantic import BaseModel, Field

from anyon_compiler.anyons import (
    AnyonModel,
    Braidword,
    evaluate_braidword,
    one_qubit_generators,
    split_blocks,
    two_qubit_generators,
)
from anyon_compiler.exceptions import UsageError
from anyon_compiler.metrics import (
    CNOT_CLASS,
    SWAP_CLASS,
    H,
    T,
    class_distance,
    leakage_metrics,
    phase_invariant_distance,
)
from anyon_compiler.qalgebra import f_matrix, r_symbol

logger = structlog.get_logger(__name__)

ONE_QUBIT_TARGETS = {"H": H, "T": T}

# Reversing the sign of the F-matrix off-diagonal conjugates σ2 (and so every
# word) by Z; σ1 is diagonal and unchanged.
GAUGE_CONJUGATORS = {"standard": np.eye(2), "flipped": np.diag([1.0, -1.0])}


class FixtureCheck(BaseModel):
    """Outcome of one golden-value comparison.

    A known deviation is a printed value that no convention reproduces; its
    check compares against the recorded measurement and keeps the printed
    value in ``published``.
    """

    name: str
    expected: float
    measured: float
    error: float = Field(ge=0.0)
    passed: bool
    deviation: bool = False
    published: float | None = None


class VerificationReport(BaseModel):
    checks: list[FixtureCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def offenders(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    @property
    def deviations(self) -> list[str]:
        return [c.name for c in self.checks if c.deviation]


def load_fixtures(path: str | Path | None = None) -> dict[str, Any]:
    """Parse the fixture file; defaults to the copy shipped with the package."""
    if path is None:
        text = resources.files("anyon_compiler.data").joinpath("fixtures.yaml").read_text()
    else:
        text = Path(path).read_text()
    return yaml.safe_load(text)


def _complex_matrix(rows: list[list[Any]]) -> np.ndarray:
    return np.array([[complex(str(v)) for v in row] for row in rows], dtype=np.complex128)


def _matrix_check(name: str, expected: np.ndarray, measured: np.ndarray, tol: float) -> FixtureCheck:
    error = float(np.max(np.abs(expected - measured)))
    return FixtureCheck(name=name, expected=0.0, measured=error, error=error, passed=error <= tol)


def _symbol_checks(fixtures: dict[str, Any], tol: float) -> list[FixtureCheck]:
    checks = []
    for k, values in fixtures["symbols"].items():
        k = int(k)
        for label, channel in (("R0", 0), ("R2", 2)):
            expected = np.array([complex(values[label])])
            measured = np.array([r_symbol(1, 1, channel, k)])
            checks.append(_matrix_check(f"k={k} {label}", expected, measured, tol))
        for label, labels in (("F111", (1, 1, 1, 1)), ("F112", (1, 1, 2, 2))):
            _, _, matrix = f_matrix(*labels, k)
            checks.append(
                _matrix_check(f"k={k} {label}", np.array(values[label], dtype=float), np.array(matrix), tol)
            )
    return checks


def _direct_sum(scalar: complex, block: np.ndarray) -> np.ndarray:
    out = np.zeros((5, 5), dtype=np.complex128)
    out[0, 0] = scalar
    out[1:, 1:] = block
    return out


def _printed_two_qubit(values: dict[str, Any], r2: complex) -> dict[str, np.ndarray]:
    """σ1, σ2, σ4, σ5 on six anyons, assembled from the printed one-qubit forms."""
    s1, s2 = _complex_matrix(values["sigma1_3"]), _complex_matrix(values["sigma2_3"])
    eye = np.eye(2)
    return {
        "sigma1_6": _direct_sum(r2, np.kron(s1, eye)),
        "sigma2_6": _direct_sum(r2, np.kron(s2, eye)),
        "sigma4_6": _direct_sum(r2, np.kron(eye, s2)),
        "sigma5_6": _direct_sum(r2, np.kron(eye, s1)),
    }


def _generator_checks(fixtures: dict[str, Any], tol: float) -> list[FixtureCheck]:
    checks = []
    for k, values in fixtures["generators"].items():
        k = int(k)
        model = AnyonModel(k)
        one = one_qubit_generators(model)
        two = two_qubit_generators(model)
        printed = {
            "sigma1_3": (_complex_matrix(values["sigma1_3"]), one.matrices[0].entries),
            "sigma2_3": (_complex_matrix(values["sigma2_3"]), one.matrices[1].entries),
            "sigma3_6": (_complex_matrix(values["sigma3_6"]), two.matrices[2].entries),
        }
        r2 = complex(fixtures["symbols"][k]["R2"])
        for label, expected in _printed_two_qubit(values, r2).items():
            printed[label] = (expected, two.matrices[int(label[5]) - 1].entries)
        for label in sorted(printed):
            expected, measured = printed[label]
            checks.append(_matrix_check(f"k={k} {label}", expected, measured, tol))
    return checks


def _word_check(
    name: str,
    row: dict[str, Any],
    measured: float,
    matches: Callable[[float, float], bool],
    deviation_tol: float,
) -> FixtureCheck:
    """Compare against the printed distance, or against the recorded measurement of a known deviation."""
    printed = float(row["distance"])
    if "known_deviation" in row:
        recorded = float(row["known_deviation"])
        error = abs(measured - recorded)
        return FixtureCheck(
            name=f"{name} (known deviation)",
            expected=recorded,
            measured=measured,
            error=error,
            passed=error <= deviation_tol * recorded and not matches(measured, printed),
            deviation=True,
            published=printed,
        )
    return FixtureCheck(
        name=name,
        expected=printed,
        measured=measured,
        error=abs(measured - printed),
        passed=matches(measured, printed),
    )


def _one_qubit_word_checks(fixtures: dict[str, Any], tolerances: dict[str, float]) -> list[FixtureCheck]:
    checks = []
    tol = tolerances["one_qubit_distance"]
    for row in fixtures["one_qubit_words"]:
        gens = one_qubit_generators(AnyonModel(row["k"])).with_inverses()
        u = evaluate_braidword(Braidword.parse(row["word"], 2), gens).entries
        z = GAUGE_CONJUGATORS[row.get("gauge", "standard")]
        measured = phase_invariant_distance(z @ u @ z, ONE_QUBIT_TARGETS[row["target"]])
        checks.append(
            _word_check(
                f"k={row['k']} {row['target']} {row['word'].replace(' ', '')}",
                row,
                measured,
                lambda m, p: abs(m - p) <= tol,
                tolerances["deviation_relative"],
            )
        )
    return checks


def cnot_tolerance(spec: dict[str, float]) -> Callable[[float, float], bool]:
    """Predicate (measured, printed) -> bool for a row's ``tolerance`` mapping."""
    if "factor" in spec:
        factor = math.log(spec["factor"])
        return lambda m, p: m > 0 and abs(math.log(m / p)) <= factor
    if "absolute" in spec:
        return lambda m, p: abs(m - p) <= spec["absolute"]
    if "ceiling" in spec:
        return lambda m, p: m <= spec["ceiling"]
    raise UsageError(f"unknown CNOT tolerance {sorted(spec)}", details={"tolerance": spec})


def _cnot_checks(fixtures: dict[str, Any], tolerances: dict[str, float]) -> list[FixtureCheck]:
    checks = []
    for row in fixtures["cnot_class_words"]:
        gens = two_qubit_generators(AnyonModel(row["k"])).with_inverses()
        _, a = split_blocks(evaluate_braidword(Braidword.parse(row["word"], 5), gens))
        checks.append(
            _word_check(
                f"k={row['k']} CNOT {row['word']}",
                row,
                class_distance(a, CNOT_CLASS),
                cnot_tolerance(row["tolerance"]),
                tolerances["deviation_relative"],
            )
        )
    return checks


def _swap_checks(fixtures: dict[str, Any], tolerances: dict[str, float]) -> list[FixtureCheck]:
    checks = []
    for row in fixtures["swap_class_words"]:
        gens = two_qubit_generators(AnyonModel(row["k"]))
        b = evaluate_braidword(Braidword.parse(row["word"], 5), gens)
        _, a = split_blocks(b)
        distance = class_distance(a, SWAP_CLASS)
        leakage = leakage_metrics(b)
        name = f"k={row['k']} SWAP {row['word']}"
        checks.append(
            FixtureCheck(
                name=f"{name} distance",
                expected=row["distance"],
                measured=distance,
                error=distance,
                passed=distance <= tolerances["swap_distance"],
            )
        )
        m11_error = abs(leakage.m11 - 1.0)
        checks.append(
            FixtureCheck(
                name=f"{name} m11",
                expected=1.0,
                measured=leakage.m11,
                error=m11_error,
                passed=m11_error <= tolerances["swap_m11"],
            )
        )
        checks.append(
            FixtureCheck(
                name=f"{name} dU",
                expected=row["dU"],
                measured=leakage.dU,
                error=leakage.dU,
                passed=leakage.dU <= tolerances["swap_dU"],
            )
        )
    return checks


def verify_fixtures(path: str | Path | None = None) -> VerificationReport:
    """Recompute every golden value and compare."""
    fixtures = load_fixtures(path)
    tolerances = fixtures["tolerances"]
    report = VerificationReport()
    report.checks += _symbol_checks(fixtures, tolerances["matrix_entry"])
    report.checks += _generator_checks(fixtures, tolerances["matrix_entry"])
    report.checks += _one_qubit_word_checks(fixtures, tolerances)
    report.checks += _cnot_checks(fixtures, tolerances)
    report.checks += _swap_checks(fixtures, tolerances)
    logger.info(
        "fixtures_verified",
        checks=len(report.checks),
        failed=len(report.offenders),
        known_deviations=len(report.deviations),
    )
    return report
