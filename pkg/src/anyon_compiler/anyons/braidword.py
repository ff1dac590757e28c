"""Braidwords: the compiler's program representation.

Letters are signed, 1-based generator indices (+i = σ_i, -i = σ_i⁻¹).
Text form uses capital letters: the first n capitals are σ_1..σ_n and
the next n their inverses, so one-qubit words use A-D and two-qubit words A-J.
"""

from __future__ import annotations

import string
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from anyon_compiler.exceptions import BraidwordParseError


def alphabet(n_generators: int) -> str:
    """Letters for σ_1..σ_n followed by σ_1⁻¹..σ_n⁻¹."""
    return string.ascii_uppercase[: 2 * n_generators]


def code_to_letter(code: int, n_generators: int) -> int:
    """Alphabet position (0-based) to signed generator index."""
    return code + 1 if code < n_generators else -(code - n_generators + 1)


def letter_to_code(letter: int, n_generators: int) -> int:
    return letter - 1 if letter > 0 else n_generators - letter - 1


@dataclass(frozen=True)
class Braidword:
    """Immutable sequence of signed generator indices."""

    letters: tuple[int, ...]
    n_generators: int

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.n_generators:
                raise BraidwordParseError(
                    f"generator index {letter} outside 1..{self.n_generators}",
                    details={"letter": letter, "n_generators": self.n_generators},
                )

    @classmethod
    def parse(cls, text: str, n_generators: int) -> Braidword:
        """Parse letter text; whitespace is ignored."""
        letters_map = {ch: i for i, ch in enumerate(alphabet(n_generators))}
        compact = "".join(text.split())
        codes = []
        for ch in compact:
            if ch not in letters_map:
                raise BraidwordParseError(
                    f"letter {ch!r} not in alphabet {alphabet(n_generators)}",
                    details={"text": text},
                )
            codes.append(letters_map[ch])
        return cls.from_codes(codes, n_generators)

    @classmethod
    def from_codes(cls, codes: Iterable[int], n_generators: int) -> Braidword:
        """Build from 0-based alphabet positions (the search engines' encoding)."""
        return cls(tuple(code_to_letter(int(c), n_generators) for c in codes), n_generators)

    @classmethod
    def empty(cls, n_generators: int) -> Braidword:
        return cls((), n_generators)

    @property
    def text(self) -> str:
        letters = alphabet(self.n_generators)
        return "".join(letters[letter_to_code(x, self.n_generators)] for x in self.letters)

    @property
    def codes(self) -> np.ndarray:
        return np.array(
            [letter_to_code(x, self.n_generators) for x in self.letters], dtype=np.int64
        )

    @property
    def uses_inverses(self) -> bool:
        return any(x < 0 for x in self.letters)

    def inverse(self) -> Braidword:
        """Reverse the word and invert every letter."""
        return Braidword(tuple(-x for x in reversed(self.letters)), self.n_generators)

    def free_reduce(self) -> Braidword:
        """Cancel adjacent σ_i σ_i⁻¹ pairs until none remain."""
        stack: list[int] = []
        for x in self.letters:
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        return Braidword(tuple(stack), self.n_generators)

    def replace(self, position: int, letter: int) -> Braidword:
        letters = list(self.letters)
        letters[position] = letter
        return Braidword(tuple(letters), self.n_generators)

    def __add__(self, other: Braidword) -> Braidword:
        if other.n_generators != self.n_generators:
            raise BraidwordParseError(
                "cannot concatenate words over different generator sets",
                details={"left": self.n_generators, "right": other.n_generators},
            )
        return Braidword(self.letters + other.letters, self.n_generators)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.text


def has_free_cancellation(codes: Sequence[int], n_generators: int) -> bool:
    """True if some adjacent pair is a generator followed by its inverse."""
    return any(
        abs(a - b) == n_generators for a, b in zip(codes, codes[1:], strict=False)
    )
