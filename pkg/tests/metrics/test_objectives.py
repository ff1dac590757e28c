"""Tests for search objectives."""

import numpy as np
import pytest

from anyon_compiler.metrics import (
    CNOT,
    CNOT_CLASS,
    H,
    SWAP,
    ClassObjective,
    class_objective,
    gate_objective,
    leakage_metrics,
    rotation,
)


def _embed(a, m=1.0):
    b = np.zeros((5, 5), dtype=np.complex128)
    b[0, 0] = m
    b[1:, 1:] = a
    return b


class TestGateObjective:
    """Tests for GateObjective."""

    def test_dim_and_name(self):
        """Test dim comes from the target."""
        objective = gate_objective(H, "H")
        assert objective.dim == 2
        assert objective.name == "H"

    def test_scores(self):
        """Test the target scores 0 and the batch keeps order."""
        objective = gate_objective(H, "H")
        scores = objective(np.stack([H, np.eye(2)]))
        assert scores[0] == pytest.approx(0.0, abs=1e-7)
        assert scores[1] > 0.5
        assert objective.score(H) == pytest.approx(0.0, abs=1e-7)


class TestClassObjective:
    """Tests for ClassObjective."""

    def test_scores_computational_block(self):
        """Test only the 4x4 block enters the class distance."""
        objective = class_objective(CNOT_CLASS)
        assert objective.dim == 5
        assert objective.name == "CNOT"
        assert objective.score(_embed(CNOT)) == pytest.approx(0.0, abs=1e-24)
        assert objective.score(_embed(SWAP)) == pytest.approx(17.0)

    def test_leakage_weight(self):
        """Test λ·dU is added to the class distance."""
        leaky = _embed(CNOT)
        leaky[:2, :2] = rotation(np.array([1.0, 0.0, 0.0]), 0.3)
        plain = ClassObjective(CNOT_CLASS)
        weighted = ClassObjective(CNOT_CLASS, leakage_weight=2.0)
        d_u = leakage_metrics(leaky).dU
        assert d_u > 0
        assert weighted.score(leaky) == pytest.approx(plain.score(leaky) + 2.0 * d_u)
