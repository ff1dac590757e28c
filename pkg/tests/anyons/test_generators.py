"""Tests for the one- and two-qubit generator sets."""

import numpy as np
import pytest

from anyon_compiler.anyons import (
    TWO_QUBIT_BASIS,
    AnyonModel,
    BraidMatrix,
    Encoding,
    braid_relation_residuals,
    fusion_chain_generators,
    generators,
    one_qubit_basis,
    one_qubit_generators,
    two_qubit_basis,
    two_qubit_generators,
)
from anyon_compiler.exceptions import DimensionMismatchError, InadmissibleLabelsError, InvalidLevelError
from anyon_compiler.metrics import phase_invariant_distance
from anyon_compiler.qalgebra import r_symbol


class TestAnyonModel:
    """Tests for AnyonModel."""

    def test_rejects_low_levels(self):
        """Test k < 3 raises."""
        with pytest.raises(InvalidLevelError):
            AnyonModel(2)

    def test_universality(self):
        """Test k=4 is flagged as non-universal."""
        assert not AnyonModel(4).is_braiding_universal
        assert AnyonModel(5).is_braiding_universal
        assert AnyonModel(3).is_braiding_universal

    def test_name(self):
        """Test the display name."""
        assert AnyonModel(7).name == "SU(2)_7"


class TestBraidMatrix:
    """Tests for BraidMatrix."""

    def test_shape_check(self):
        """Test entries must match the basis."""
        with pytest.raises(DimensionMismatchError):
            BraidMatrix(np.eye(3), ("|0>", "|1>"))

    def test_read_only(self, one_qubit_k5):
        """Test entries cannot be mutated."""
        with pytest.raises(ValueError):
            one_qubit_k5.matrices[0].entries[0, 0] = 0

    def test_dagger(self, one_qubit_k5):
        """Test dagger is the conjugate transpose."""
        m = one_qubit_k5.matrices[1]
        np.testing.assert_allclose(m.dagger.entries, m.entries.conj().T)


class TestOneQubitGenerators:
    """Tests for one_qubit_generators."""

    def test_sigma1_k5(self, one_qubit_k5):
        """Test σ1 at k=5 against printed values."""
        expected = np.diag([-0.78183148 + 0.62348980j, 0.97492791 + 0.22252093j])
        np.testing.assert_allclose(one_qubit_k5.matrices[0].entries, expected, atol=1e-8)

    def test_sigma2_k7(self):
        """Test σ2 entry (0,0) at k=7."""
        gens = one_qubit_generators(AnyonModel(7))
        assert gens.matrices[1].entries[0, 0] == pytest.approx(0.46080249 + 0.26604444j, abs=1e-8)

    def test_sigma2_is_f_conjugated_sigma1(self, one_qubit_k5):
        """Test σ2 and σ1 share their spectrum."""
        s1, s2 = (m.entries for m in one_qubit_k5.matrices)
        np.testing.assert_allclose(np.sort_complex(np.linalg.eigvals(s2)), np.sort_complex(np.diag(s1)), atol=1e-12)

    def test_fibonacci_phases(self):
        """Test k=3 σ1 equals the Fibonacci R-matrix up to a global phase."""
        gens = one_qubit_generators(AnyonModel(3))
        fibonacci = np.diag([np.exp(-4j * np.pi / 5), np.exp(3j * np.pi / 5)])
        assert phase_invariant_distance(fibonacci, gens.matrices[0]) < 1e-7

    def test_basis_labels(self, one_qubit_k5):
        """Test states are ordered by the logical channel."""
        assert one_qubit_basis(AnyonModel(5)) == [(1, 0, 1), (1, 2, 1)]
        assert one_qubit_k5.basis_order == ("|0>", "|1>")

    def test_spin_equivalent_encoding(self):
        """Test the label-4 encoding at k=5 matches label 1 up to global phases."""
        model = AnyonModel(5)
        half = one_qubit_generators(model, anyon=1)
        two = one_qubit_generators(model, anyon=4)
        for a, b in zip(half.matrices, two.matrices, strict=True):
            assert phase_invariant_distance(a, b) <= 1e-7

    def test_label_without_qubit(self):
        """Test labels whose fusion space is not two-dimensional raise."""
        with pytest.raises(InadmissibleLabelsError):
            one_qubit_generators(AnyonModel(5), anyon=5)


class TestTwoQubitGenerators:
    """Tests for two_qubit_generators."""

    def test_basis_order(self, two_qubit_k5):
        """Test NC first, then |00>..|11>."""
        basis = two_qubit_basis(AnyonModel(5))
        assert basis[0][2] != 1
        assert [(p[1], p[3]) for p in basis[1:]] == [(0, 0), (0, 2), (2, 0), (2, 2)]
        assert two_qubit_k5.basis_order == TWO_QUBIT_BASIS

    def test_sigma3_k5(self, two_qubit_k5):
        """Test σ3 entries at k=5 against printed values."""
        s3 = two_qubit_k5.matrices[2].entries
        assert s3[0, 0] == pytest.approx(0.44504187j, abs=1e-8)
        assert s3[0, 4] == pytest.approx(0.87305746 - 0.19926967j, abs=1e-8)

    def test_sigma3_k6(self):
        """Test σ3 entry (4,4) at k=6."""
        s3 = two_qubit_generators(AnyonModel(6)).matrices[2].entries
        assert s3[4, 4] == pytest.approx(0.23012473 + 0.34440599j, abs=1e-8)

    @pytest.mark.parametrize("k", [3, 5, 6, 7, 9])
    def test_sigma5_diagonal(self, k):
        """Test σ5 = diag(R2, R0, R2, R0, R2)."""
        r0, r2 = r_symbol(1, 1, 0, k), r_symbol(1, 1, 2, k)
        s5 = two_qubit_generators(AnyonModel(k)).matrices[4].entries
        np.testing.assert_allclose(s5, np.diag([r2, r0, r2, r0, r2]), atol=1e-14)

    def test_direct_sum_structure(self, one_qubit_k5, two_qubit_k5):
        """Test σ1, σ2, σ4, σ5 act on one qubit factor and leave NC alone."""
        s1, s2 = (m.entries for m in one_qubit_k5.matrices)
        eye = np.eye(2)
        expected = {0: np.kron(s1, eye), 1: np.kron(s2, eye), 3: np.kron(eye, s2), 4: np.kron(eye, s1)}
        for index, block in expected.items():
            m = two_qubit_k5.matrices[index].entries
            np.testing.assert_array_equal(m[1:, 1:], block)
            assert np.all(m[0, 1:] == 0) and np.all(m[1:, 0] == 0)

    def test_sigma3_is_only_leaking_generator(self, two_qubit_k5):
        """Test only σ3 couples NC with the computational space."""
        s3 = two_qubit_k5.matrices[2].entries
        assert np.abs(s3[0, 1:]).max() > 0.1

    @pytest.mark.parametrize("encoding", list(Encoding))
    @pytest.mark.parametrize("k", [3, 5, 6, 7])
    def test_matches_fusion_chain(self, k, encoding):
        """Test the direct-sum generators equal σ_i built straight from the chain."""
        model = AnyonModel(k)
        built = generators(model, encoding)
        chain = fusion_chain_generators(model, encoding)
        for a, b in zip(built.matrices, chain.matrices, strict=True):
            np.testing.assert_allclose(a.entries, b.entries, atol=1e-12)


class TestBraidRelations:
    """Tests for the braid-group relations."""

    @pytest.mark.parametrize("encoding", list(Encoding))
    @pytest.mark.parametrize("k", range(3, 11))
    def test_relations_hold(self, k, encoding):
        """Test commuting and Yang-Baxter relations and unitarity."""
        residuals = braid_relation_residuals(generators(AnyonModel(k), encoding))
        assert residuals["commute"] <= 1e-10
        assert residuals["yang_baxter"] <= 1e-10
        assert residuals["unitarity"] <= 1e-12


class TestGeneratorSet:
    """Tests for GeneratorSet."""

    def test_alphabets(self, one_qubit_k5, two_qubit_k5):
        """Test letters with and without inverses."""
        assert one_qubit_k5.alphabet == "AB"
        assert one_qubit_k5.with_inverses().alphabet == "ABCD"
        assert two_qubit_k5.with_inverses().alphabet == "ABCDEFGHIJ"
        assert two_qubit_k5.with_inverses().without_inverses().alphabet == "ABCDE"

    def test_stack(self, one_qubit_k5):
        """Test the stack holds generators then inverses."""
        stack = one_qubit_k5.with_inverses().stack
        assert stack.shape == (4, 2, 2)
        np.testing.assert_allclose(stack[2], one_qubit_k5.matrices[0].entries.conj().T)
        np.testing.assert_allclose(stack[2] @ stack[0], np.eye(2), atol=1e-14)

    def test_matrix_lookup(self, two_qubit_k5):
        """Test signed lookup and its bounds."""
        np.testing.assert_array_equal(two_qubit_k5.matrix(3), two_qubit_k5.matrices[2].entries)
        np.testing.assert_array_equal(two_qubit_k5.matrix(-3), two_qubit_k5.matrices[2].entries.conj().T)
        with pytest.raises(DimensionMismatchError):
            two_qubit_k5.matrix(6)

    def test_cached_per_level(self, model5):
        """Test repeated builds share one object."""
        assert one_qubit_generators(model5) is one_qubit_generators(AnyonModel(5))
