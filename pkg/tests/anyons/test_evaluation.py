"""Tests for braidword evaluation and block splitting."""

import numpy as np
import pytest

from anyon_compiler.anyons import (
    AnyonModel,
    Braidword,
    evaluate_braidword,
    evaluate_codes,
    split_blocks,
    two_qubit_generators,
)
from anyon_compiler.exceptions import DimensionMismatchError
from anyon_compiler.metrics import SWAP_CLASS, class_distance, leakage_metrics


class TestEvaluateBraidword:
    """Tests for evaluate_braidword."""

    def test_empty_word_is_identity(self, two_qubit_k5):
        """Test the empty word evaluates to I."""
        u = evaluate_braidword(Braidword.empty(5), two_qubit_k5)
        np.testing.assert_array_equal(u.entries, np.eye(5))

    def test_single_letter(self, one_qubit_k5):
        """Test one letter evaluates to its generator."""
        u = evaluate_braidword(one_qubit_k5.parse("A"), one_qubit_k5)
        np.testing.assert_array_equal(u.entries, one_qubit_k5.matrices[0].entries)

    def test_leftmost_letter_acts_first(self, one_qubit_k5):
        """Test AB evaluates to σ2 σ1."""
        s1, s2 = (m.entries for m in one_qubit_k5.matrices)
        u = evaluate_braidword(one_qubit_k5.parse("AB"), one_qubit_k5)
        np.testing.assert_allclose(u.entries, s2 @ s1)

    def test_word_times_inverse(self, one_qubit_k5):
        """Test w followed by w⁻¹ is the identity."""
        gens = one_qubit_k5.with_inverses()
        word = gens.parse("ABBADCA")
        u = evaluate_braidword(word + word.inverse(), gens)
        np.testing.assert_allclose(u.entries, np.eye(2), atol=1e-13)

    def test_generator_count_mismatch(self, one_qubit_k5):
        """Test a two-qubit word on one-qubit generators raises."""
        with pytest.raises(DimensionMismatchError):
            evaluate_braidword(Braidword.parse("AE", 5), one_qubit_k5)

    def test_exact_swap_word(self, two_qubit_k5):
        """Test the length-9 [SWAP] word at k=5 is exact and leak-free."""
        b = evaluate_braidword(two_qubit_k5.parse("CDBACEBDC"), two_qubit_k5)
        _, a = split_blocks(b)
        assert class_distance(a, SWAP_CLASS) <= 1e-28
        report = leakage_metrics(b)
        assert report.m11 == pytest.approx(1.0, abs=1e-12)
        assert report.dU <= 1e-12


class TestEvaluateCodes:
    """Tests for the batched evaluator."""

    def test_matches_scalar_path(self, two_qubit_k5, rng):
        """Test batched products equal word-by-word evaluation."""
        gens = two_qubit_k5.with_inverses()
        codes = rng.integers(0, gens.alphabet_size, size=(6, 11))
        batch = evaluate_codes(codes, gens.stack)
        for row, u in zip(codes, batch, strict=True):
            expected = evaluate_braidword(Braidword.from_codes(row, 5), gens).entries
            np.testing.assert_allclose(u, expected, atol=1e-13)

    def test_initial_matrix(self, one_qubit_k5):
        """Test an initial matrix is applied before the first letter."""
        stack = one_qubit_k5.stack
        prefix = evaluate_codes([[0, 1]], stack)
        whole = evaluate_codes([[0, 1, 1, 0]], stack)
        np.testing.assert_allclose(evaluate_codes([[1, 0]], stack, initial=prefix[0]), whole)

    def test_zero_length(self, one_qubit_k5):
        """Test zero-length words evaluate to identities."""
        out = evaluate_codes(np.zeros((3, 0), dtype=np.int64), one_qubit_k5.stack)
        np.testing.assert_array_equal(out, np.broadcast_to(np.eye(2), (3, 2, 2)))


class TestSplitBlocks:
    """Tests for split_blocks."""

    def test_sigma5(self, two_qubit_k5):
        """Test σ5 splits into R2 and diag(R0, R2, R0, R2)."""
        s5 = two_qubit_k5.matrices[4]
        m, a = split_blocks(s5)
        assert m == s5.entries[0, 0]
        np.testing.assert_array_equal(a, np.diag(np.diag(s5.entries)[1:]))

    def test_identity(self):
        """Test I5 splits into 1 and I4."""
        m, a = split_blocks(np.eye(5))
        assert m == 1
        np.testing.assert_array_equal(a, np.eye(4))

    def test_exact_swap_word_k6(self):
        """Test the k=6 [SWAP] word keeps |M| = 1."""
        gens = two_qubit_generators(AnyonModel(6))
        m, _ = split_blocks(evaluate_braidword(gens.parse("CDEBCADBC"), gens))
        assert abs(m) == pytest.approx(1.0, abs=1e-12)

    def test_requires_five_by_five(self):
        """Test other shapes raise."""
        with pytest.raises(DimensionMismatchError):
            split_blocks(np.eye(4))
