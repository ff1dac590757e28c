"""Tests for Braidword."""

import numpy as np
import pytest

from anyon_compiler.anyons import Braidword, alphabet, has_free_cancellation
from anyon_compiler.exceptions import BraidwordParseError


class TestAlphabet:
    """Tests for letter alphabets."""

    def test_one_and_two_qubit_alphabets(self):
        """Test A-D for two generators and A-J for five."""
        assert alphabet(2) == "ABCD"
        assert alphabet(5) == "ABCDEFGHIJ"


class TestBraidword:
    """Tests for Braidword parsing and algebra."""

    def test_parse_and_text(self):
        """Test text survives a parse."""
        word = Braidword.parse("ADCCDCDABB", 2)
        assert word.text == "ADCCDCDABB"
        assert len(word) == 10
        assert word.letters[:3] == (1, -2, -1)

    def test_parse_ignores_whitespace(self):
        """Test whitespace inside a word is dropped."""
        assert Braidword.parse("AB C\nD", 2).text == "ABCD"

    def test_parse_rejects_foreign_letters(self):
        """Test letters outside the alphabet raise."""
        with pytest.raises(BraidwordParseError):
            Braidword.parse("ABE", 2)

    def test_invalid_index(self):
        """Test generator indices outside 1..n raise."""
        with pytest.raises(BraidwordParseError):
            Braidword((1, 3), 2)
        with pytest.raises(BraidwordParseError):
            Braidword((0,), 2)

    def test_codes(self):
        """Test codes are alphabet positions."""
        word = Braidword.parse("AEJ", 5)
        np.testing.assert_array_equal(word.codes, [0, 4, 9])
        assert Braidword.from_codes([0, 4, 9], 5) == word

    def test_empty(self):
        """Test the empty word."""
        word = Braidword.empty(5)
        assert len(word) == 0
        assert word.text == ""
        assert not word.uses_inverses

    def test_inverse(self):
        """Test inverse reverses and inverts letters."""
        word = Braidword.parse("AB", 2)
        assert word.inverse().text == "DC"
        assert word.inverse().inverse() == word

    def test_free_reduce(self):
        """Test adjacent inverse pairs cancel, nested ones too."""
        assert Braidword.parse("ACB", 2).free_reduce().text == "B"
        assert Braidword.parse("ABDC", 2).free_reduce().text == ""
        assert Braidword.parse("AA", 2).free_reduce().text == "AA"

    def test_concatenation(self):
        """Test + joins words over one generator set."""
        assert (Braidword.parse("AB", 2) + Braidword.parse("C", 2)).text == "ABC"

    def test_concatenation_mismatch(self):
        """Test + refuses words over different generator sets."""
        with pytest.raises(BraidwordParseError):
            Braidword.parse("A", 2) + Braidword.parse("A", 5)

    def test_replace(self):
        """Test replacing one letter."""
        assert Braidword.parse("AAA", 2).replace(2, -2).text == "AAD"

    def test_uses_inverses(self):
        """Test detection of inverse letters."""
        assert Braidword.parse("ABC", 2).uses_inverses
        assert not Braidword.parse("ABAB", 2).uses_inverses


class TestFreeCancellation:
    """Tests for has_free_cancellation."""

    def test_detects_pairs(self):
        """Test a letter next to its inverse is detected in either order."""
        assert has_free_cancellation([0, 2], 2)
        assert has_free_cancellation([1, 3, 1], 2)
        assert has_free_cancellation([7, 2], 5)

    def test_clean_words(self):
        """Test words without inverse pairs pass."""
        assert not has_free_cancellation([0, 1, 0], 2)
        assert not has_free_cancellation([0, 0], 2)
        assert not has_free_cancellation([], 2)
