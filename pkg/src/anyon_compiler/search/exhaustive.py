"""Pruned exhaustive enumeration of fixed-length braidwords.

Words are enumerated in lexicographic order of alphabet codes. With
inverse letters, words containing an adjacent σ_i σ_i⁻¹ pair are skipped.
Each word is split into a prefix and a short suffix: suffix matrices are
computed once and every prefix chunk is combined with all of them in one
batched product.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import structlog

from anyon_compiler.anyons import Braidword, GeneratorSet, evaluate_codes
from anyon_compiler.exceptions import SearchBudgetExceededError, UsageError
from anyon_compiler.metrics import Objective
from anyon_compiler.models import CompilationResult, Engine
from anyon_compiler.search.result import build_result, check_objective

logger = structlog.get_logger(__name__)

DEFAULT_MAX_CANDIDATES = 2_000_000_000
DEFAULT_SUFFIX_LENGTH = 5
CHUNK_CANDIDATES = 1 << 16


def candidate_count(alphabet_size: int, length: int, include_inverses: bool) -> int:
    """Words of exactly ``length`` letters that survive free-cancellation pruning."""
    if length == 0:
        return 1
    if include_inverses:
        return alphabet_size * (alphabet_size - 1) ** (length - 1)
    return alphabet_size**length


def enumerate_words(alphabet_size: int, length: int, n_generators: int, prune: bool) -> np.ndarray:
    """All valid words as an (M, length) code array, lexicographic."""
    words = np.zeros((1, 0), dtype=np.int64)
    letters = np.arange(alphabet_size, dtype=np.int64)
    for _ in range(length):
        grown = np.concatenate(
            [np.repeat(words, alphabet_size, axis=0), np.tile(letters, len(words))[:, None]],
            axis=1,
        )
        if prune and grown.shape[1] > 1:
            keep = np.abs(grown[:, -1] - grown[:, -2]) != n_generators
            grown = grown[keep]
        words = grown
    return words


def _junction_mask(prefixes: np.ndarray, suffixes: np.ndarray, n_generators: int) -> np.ndarray:
    if prefixes.shape[1] == 0 or suffixes.shape[1] == 0:
        return np.ones((len(prefixes), len(suffixes)), dtype=bool)
    return np.abs(prefixes[:, -1][:, None] - suffixes[:, 0][None, :]) != n_generators


def exhaustive_search(
    gens: GeneratorSet,
    length: int,
    objective: Objective,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    suffix_length: int = DEFAULT_SUFFIX_LENGTH,
    threads: int = 1,
) -> CompilationResult:
    """Objective-minimizing word of exactly ``length`` letters.

    Ties go to the lexicographically smallest word. Raises
    SearchBudgetExceededError when the projected candidate count is above
    ``max_candidates``.
    """
    if length < 1:
        raise UsageError(f"length must be >= 1, got {length}")
    check_objective(gens, objective)
    size = gens.alphabet_size
    prune = gens.include_inverses
    projected = candidate_count(size, length, prune)
    if projected > max_candidates:
        raise SearchBudgetExceededError(projected, max_candidates)

    started = time.perf_counter()
    n = gens.n_generators
    stack = gens.stack
    suffix_len = min(max(suffix_length, 1), length)
    prefixes = enumerate_words(size, length - suffix_len, n, prune)
    suffixes = enumerate_words(size, suffix_len, n, prune)
    suffix_mats = evaluate_codes(suffixes, stack)
    per_chunk = max(1, CHUNK_CANDIDATES // len(suffixes))
    chunks = [prefixes[i : i + per_chunk] for i in range(0, len(prefixes), per_chunk)]

    logger.info(
        "exhaustive_started",
        k=gens.level,
        length=length,
        alphabet=gens.alphabet,
        candidates=projected,
        chunks=len(chunks),
    )

    def scan(chunk: np.ndarray) -> tuple[float, np.ndarray, int]:
        prefix_mats = evaluate_codes(chunk, stack)
        products = suffix_mats[None, :, :, :] @ prefix_mats[:, None, :, :]
        mask = _junction_mask(chunk, suffixes, n)
        scores = np.full(mask.shape, np.inf)
        scores[mask] = objective(products[mask])
        flat = int(np.argmin(scores))
        p, s = divmod(flat, len(suffixes))
        word = np.concatenate([chunk[p], suffixes[s]])
        return float(scores.flat[flat]), word, int(mask.sum())

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(scan, chunks))
    else:
        outcomes = [scan(c) for c in chunks]

    best_score, best_word, evaluations = np.inf, None, 0
    for score, word, count in outcomes:
        evaluations += count
        if best_word is None or score < best_score:
            best_score, best_word = score, word

    result = build_result(
        Braidword.from_codes(best_word, n), gens, objective, Engine.EXHAUSTIVE, started, evaluations
    )
    logger.info(
        "exhaustive_finished",
        k=gens.level,
        length=length,
        word=result.word.text,
        distance=result.distance,
        evaluations=evaluations,
    )
    return result
