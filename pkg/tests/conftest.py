"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from anyon_compiler.anyons import AnyonModel, one_qubit_generators, two_qubit_generators
from anyon_compiler.core.config import CompilerConfig
from anyon_compiler.models import SearchConfig


@pytest.fixture
def model5():
    """SU(2)_5 model."""
    return AnyonModel(5)


@pytest.fixture
def one_qubit_k5(model5):
    """One-qubit generators at k=5, no inverses."""
    return one_qubit_generators(model5)


@pytest.fixture
def two_qubit_k5(model5):
    """Two-qubit generators at k=5, no inverses."""
    return two_qubit_generators(model5)


@pytest.fixture
def small_search():
    """GA settings small enough for unit tests."""
    return SearchConfig(
        population_size=60,
        crossovers_per_generation=30,
        survivors=20,
        generations=15,
        base_length=8,
        rng_seed=7,
    )


@pytest.fixture
def small_config(small_search):
    """Compiler config carrying the small GA settings."""
    return CompilerConfig(search=small_search)


@pytest.fixture
def rng():
    """Seeded numpy generator."""
    return np.random.default_rng(1234)


def random_su2(rng, angle_range=(0.0, np.pi)):
    """Rotation about a random axis by an angle drawn from ``angle_range``."""
    from anyon_compiler.metrics import rotation

    axis = rng.normal(size=3)
    return rotation(axis, rng.uniform(*angle_range))
