"""Genetic-algorithm search over fixed-length braidwords.

Each generation runs T crossovers (tournament-selected parent pair, one
random splice point, per-letter mutation with probability p), then keeps
the best n of parents and offspring, one per distinct fitness value. The
population is refilled with mutated copies of the survivors plus a share
of fresh random immigrants. Whenever the best word improves it is polished
by single-letter descent. The best word ever seen is returned.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from types import TracebackType

import numpy as np
import structlog

from anyon_compiler.anyons import Braidword, GeneratorSet, evaluate_codes
from anyon_compiler.exceptions import UsageError
from anyon_compiler.metrics import Objective
from anyon_compiler.models import CompilationResult, Engine, SearchConfig
from anyon_compiler.search.result import build_result, check_objective

logger = structlog.get_logger(__name__)

FITNESS_CHUNK = 256


def crossover(parent_a: np.ndarray, parent_b: np.ndarray, cut: np.ndarray) -> np.ndarray:
    """Splice rows of ``parent_a`` (before ``cut``) onto ``parent_b`` (from ``cut``)."""
    parent_a = np.atleast_2d(parent_a)
    parent_b = np.atleast_2d(parent_b)
    cut = np.atleast_1d(cut)
    positions = np.arange(parent_a.shape[1])[None, :]
    return np.where(positions < cut[:, None], parent_a, parent_b)


def mutate(words: np.ndarray, prob: float, alphabet_size: int, rng: np.random.Generator) -> np.ndarray:
    """Replace each letter with probability ``prob`` by a different letter."""
    if alphabet_size < 2 or prob == 0.0:
        return words.copy()
    hit = rng.random(words.shape) < prob
    shift = rng.integers(1, alphabet_size, size=words.shape)
    return np.where(hit, (words + shift) % alphabet_size, words)


def tournament_select(scores: np.ndarray, count: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Indices of ``count`` winners, each the best of ``size`` uniform draws."""
    entrants = rng.integers(0, len(scores), size=(count, size))
    return entrants[np.arange(count), np.argmin(scores[entrants], axis=1)]


def distinct_best(scores: np.ndarray, count: int) -> np.ndarray:
    """Indices of the ``count`` lowest scores, keeping the first index of each repeated value."""
    _, first = np.unique(scores, return_index=True)
    return first[:count]


def polish(
    word: np.ndarray,
    score: float,
    fitness: Callable[[np.ndarray], np.ndarray],
    alphabet_size: int,
    rounds: int,
) -> tuple[np.ndarray, float, int]:
    """Steepest single-letter descent from ``word``, at most ``rounds`` sweeps.

    Returns (word, score, evaluations).
    """
    if alphabet_size < 2 or rounds == 0:
        return word, score, 0
    length = len(word)
    shifts = np.tile(np.arange(1, alphabet_size), length)
    positions = np.repeat(np.arange(length), alphabet_size - 1)
    rows = np.arange(len(positions))
    evaluations = 0
    for _ in range(rounds):
        neighbours = np.repeat(word[None, :], len(positions), axis=0)
        neighbours[rows, positions] = (word[positions] + shifts) % alphabet_size
        scores = fitness(neighbours)
        evaluations += len(neighbours)
        best = int(np.argmin(scores))
        if scores[best] >= score:
            break
        word, score = neighbours[best], float(scores[best])
    return word, score, evaluations


class FitnessEvaluator:
    """Scores code arrays, splitting large batches across a thread pool.

    Rows are scored independently and reassembled in order, so any worker
    count gives the sequential result.
    """

    def __init__(self, gens: GeneratorSet, objective: Objective, threads: int = 1):
        self.stack = gens.stack
        self.objective = objective
        self.threads = max(threads, 1)
        self._pool: ThreadPoolExecutor | None = None

    def __enter__(self) -> FitnessEvaluator:
        if self.threads > 1:
            self._pool = ThreadPoolExecutor(max_workers=self.threads)
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def _score(self, words: np.ndarray) -> np.ndarray:
        return self.objective(evaluate_codes(words, self.stack))

    def __call__(self, words: np.ndarray) -> np.ndarray:
        if self._pool is None or len(words) <= FITNESS_CHUNK:
            return self._score(words)
        chunks = [words[i : i + FITNESS_CHUNK] for i in range(0, len(words), FITNESS_CHUNK)]
        return np.concatenate(list(self._pool.map(self._score, chunks)))


def ga_search(
    gens: GeneratorSet,
    length: int,
    objective: Objective,
    cfg: SearchConfig,
    *,
    threads: int = 1,
) -> CompilationResult:
    """Best word of ``length`` letters found by the genetic algorithm."""
    if length < 1:
        raise UsageError(f"length must be >= 1, got {length}")
    check_objective(gens, objective)
    started = time.perf_counter()
    with FitnessEvaluator(gens, objective, threads) as fitness:
        best_word, evaluations = _evolve(gens.alphabet_size, length, cfg, fitness)

    result = build_result(
        Braidword.from_codes(best_word, gens.n_generators), gens, objective, Engine.GA, started, evaluations
    )
    logger.info(
        "ga_finished",
        k=gens.level,
        length=length,
        seed=cfg.rng_seed,
        distance=result.distance,
        evaluations=evaluations,
    )
    return result


def _evolve(size: int, length: int, cfg: SearchConfig, fitness: FitnessEvaluator) -> tuple[np.ndarray, int]:
    rng = np.random.default_rng(cfg.rng_seed)
    population = rng.integers(0, size, size=(cfg.population_size, length))
    scores = fitness(population)
    evaluations = len(population)
    best_index = int(np.argmin(scores))
    best_word, best_score = population[best_index].copy(), float(scores[best_index])
    immigrant_quota = int(round(cfg.immigrant_fraction * cfg.population_size))

    for generation in range(cfg.generations):
        if best_score <= cfg.stop_distance:
            break
        parents = tournament_select(scores, 2 * cfg.crossovers_per_generation, cfg.tournament_size, rng)
        parents = parents.reshape(-1, 2)
        cuts = rng.integers(1, length, size=len(parents)) if length > 1 else np.zeros(len(parents), dtype=np.int64)
        children = crossover(population[parents[:, 0]], population[parents[:, 1]], cuts)
        children = mutate(children, cfg.mutation_prob, size, rng)
        child_scores = fitness(children)

        pool = np.concatenate([population, children])
        pool_scores = np.concatenate([scores, child_scores])
        keep = distinct_best(pool_scores, cfg.survivors)
        survivors, survivor_scores = pool[keep], pool_scores[keep]

        refill = cfg.population_size - len(survivors)
        immigrants = min(refill, immigrant_quota)
        clones = mutate(
            survivors[rng.integers(0, len(survivors), size=refill - immigrants)], cfg.mutation_prob, size, rng
        )
        newcomers = np.concatenate([clones, rng.integers(0, size, size=(immigrants, length))])
        population = np.concatenate([survivors, newcomers])
        scores = np.concatenate([survivor_scores, fitness(newcomers) if refill else np.empty(0)])
        evaluations += len(children) + refill

        index = int(np.argmin(scores))
        if scores[index] < best_score:
            best_word, best_score = population[index].copy(), float(scores[index])
            polished, polished_score, used = polish(best_word, best_score, fitness, size, cfg.polish_rounds)
            evaluations += used
            if polished_score < best_score:
                worst = int(np.argmax(scores))
                population[worst], scores[worst] = polished, polished_score
                best_word, best_score = polished.copy(), polished_score
        logger.debug("ga_generation", generation=generation, best=best_score, survivors=len(survivors))

    return best_word, evaluations
