"""GA-seeded Solovay-Kitaev recursion.

Level 0 is a GA search of length l0. Level n approximates U by
V W V† W† U_{n-1}, where V, W decompose U U_{n-1}† as a group commutator
and are themselves approximated at level n-1. Letters act leftmost first,
so that product is the word U_{n-1} · W⁻¹ · V⁻¹ · W · V and each level
multiplies the length by five.
"""

from __future__ import annotations

import time

import numpy as np
import structlog

from anyon_compiler.anyons import Braidword, GeneratorSet, evaluate_braidword
from anyon_compiler.exceptions import DegenerateCommutatorError, DimensionMismatchError, UsageError
from anyon_compiler.metrics import gate_objective, su2_project
from anyon_compiler.models import CompilationResult, Engine, SearchConfig
from anyon_compiler.search.commutator import gc_decompose
from anyon_compiler.search.genetic import ga_search
from anyon_compiler.search.result import build_result

logger = structlog.get_logger(__name__)


class _Recursion:
    """Carries the generator set, config and GA call counter through one run."""

    def __init__(self, gens: GeneratorSet, cfg: SearchConfig, threads: int = 1):
        self.gens = gens
        self.cfg = cfg
        self.threads = threads
        self.ga_calls = 0
        self.evaluations = 0

    def _next_config(self) -> SearchConfig:
        # Every GA call draws from its own stream derived from (seed, call index).
        seed = np.random.SeedSequence([self.cfg.rng_seed, self.ga_calls]).generate_state(1, np.uint64)[0]
        self.ga_calls += 1
        return self.cfg.model_copy(update={"rng_seed": int(seed)})

    def basic_approximation(self, target: np.ndarray) -> Braidword:
        result = ga_search(
            self.gens, self.cfg.base_length, gate_objective(target), self._next_config(), threads=self.threads
        )
        self.evaluations += result.evaluations
        return result.word

    def matrix(self, word: Braidword) -> np.ndarray:
        return evaluate_braidword(word, self.gens).entries

    def perturb(self, word: Braidword, target: np.ndarray) -> Braidword:
        """Swap the last letter for the alternative closest to ``target``."""
        objective = gate_objective(target)
        candidates = [
            word.replace(len(word) - 1, letter)
            for letter in (*range(1, word.n_generators + 1), *range(-1, -word.n_generators - 1, -1))
            if letter != word.letters[-1]
        ]
        scores = [objective.score(self.matrix(c)) for c in candidates]
        self.evaluations += len(candidates)
        return candidates[int(np.argmin(scores))]

    def approximate(self, target: np.ndarray, level: int) -> Braidword:
        if level == 0:
            return self.basic_approximation(target)
        previous = self.approximate(target, level - 1)
        for attempt in range(self.cfg.max_retries + 1):
            delta = su2_project(target @ self.matrix(previous).conj().T)
            try:
                pair = gc_decompose(delta)
                break
            except DegenerateCommutatorError:
                if attempt == self.cfg.max_retries:
                    raise
                logger.warning("sk_degenerate_commutator", level=level, attempt=attempt + 1)
                previous = self.perturb(previous, target)
        v_word = self.approximate(pair.v, level - 1)
        w_word = self.approximate(pair.w, level - 1)
        return previous + w_word.inverse() + v_word.inverse() + w_word + v_word


def solovay_kitaev(
    target: np.ndarray,
    level: int,
    gens: GeneratorSet,
    cfg: SearchConfig,
    *,
    threads: int = 1,
) -> CompilationResult:
    """Approximate a one-qubit ``target`` with a word of length l0·5^level."""
    target = np.asarray(getattr(target, "entries", target), dtype=np.complex128)
    if level < 0:
        raise UsageError(f"sk level must be >= 0, got {level}")
    if target.shape != (2, 2) or gens.dim != 2:
        raise DimensionMismatchError(
            "Solovay-Kitaev needs a 2x2 target and one-qubit generators",
            details={"target": list(target.shape), "dim": gens.dim},
        )
    gens = gens.with_inverses()
    started = time.perf_counter()
    recursion = _Recursion(gens, cfg, threads)
    word = recursion.approximate(target, level)
    result = build_result(
        word, gens, gate_objective(target), Engine.SK, started, recursion.evaluations, sk_level=level
    )
    logger.info(
        "sk_finished",
        k=gens.level,
        level=level,
        length=len(word),
        ga_calls=recursion.ga_calls,
        distance=result.distance,
    )
    return result
