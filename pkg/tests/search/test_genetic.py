"""Tests for the genetic-algorithm engine."""

import numpy as np
import pytest

from anyon_compiler.anyons import AnyonModel, evaluate_braidword, two_qubit_generators
from anyon_compiler.core.runner import resolve_threads
from anyon_compiler.metrics import CNOT_CLASS, H, T, class_objective, gate_objective
from anyon_compiler.models import Engine, SearchConfig
from anyon_compiler.search import (
    FitnessEvaluator,
    crossover,
    distinct_best,
    ga_search,
    mutate,
    polish,
    tournament_select,
)
from anyon_compiler.search.genetic import FITNESS_CHUNK


class TestOperators:
    """Tests for crossover and mutation."""

    def test_crossover_identical_parents(self):
        """Test splicing a word with itself returns it."""
        parent = np.array([[0, 1, 2, 3, 1, 0]])
        np.testing.assert_array_equal(crossover(parent, parent, np.array([3])), parent)

    def test_crossover_cut(self):
        """Test letters before the cut come from the first parent."""
        a = np.zeros((2, 5), dtype=np.int64)
        b = np.ones((2, 5), dtype=np.int64)
        child = crossover(a, b, np.array([1, 4]))
        np.testing.assert_array_equal(child, [[0, 1, 1, 1, 1], [0, 0, 0, 0, 1]])

    def test_mutate_zero_probability(self, rng):
        """Test p=0 leaves words alone."""
        words = rng.integers(0, 4, size=(10, 8))
        np.testing.assert_array_equal(mutate(words, 0.0, 4, rng), words)

    def test_mutate_always_changes_letter(self, rng):
        """Test p=1 replaces every letter by a different valid one."""
        words = rng.integers(0, 4, size=(10, 8))
        mutated = mutate(words, 1.0, 4, rng)
        assert np.all(mutated != words)
        assert mutated.min() >= 0 and mutated.max() < 4


class TestGaSearch:
    """Tests for ga_search."""

    def test_finds_exact_short_word(self, one_qubit_k5, small_search):
        """Test an objective reachable in the search space scores 0."""
        objective = gate_objective(one_qubit_k5.matrices[0].entries)
        result = ga_search(one_qubit_k5, 1, objective, small_search)
        assert result.word.text == "A"
        assert result.distance == pytest.approx(0.0, abs=1e-7)
        assert result.engine == Engine.GA.value

    def test_deterministic(self, one_qubit_k5, small_search):
        """Test one seed gives one result."""
        objective = gate_objective(H, "H")
        first = ga_search(one_qubit_k5.with_inverses(), 12, objective, small_search)
        second = ga_search(one_qubit_k5.with_inverses(), 12, objective, small_search)
        assert first.word == second.word
        assert first.distance == second.distance
        assert first.evaluations == second.evaluations

    def test_seed_changes_search(self, one_qubit_k5, small_search):
        """Test different seeds explore differently."""
        objective = gate_objective(H, "H")
        gens = one_qubit_k5.with_inverses()
        words = {
            ga_search(gens, 20, objective, small_search.model_copy(update={"rng_seed": seed})).word.text
            for seed in range(4)
        }
        assert len(words) > 1

    def test_word_length_and_alphabet(self, two_qubit_k5, small_search):
        """Test results have the requested length over the generator alphabet."""
        result = ga_search(two_qubit_k5.with_inverses(), 10, class_objective(CNOT_CLASS), small_search)
        assert len(result.word) == 10
        assert set(result.word.text) <= set("ABCDEFGHIJ")
        assert result.leakage is not None

    def test_stop_distance(self, one_qubit_k5, small_search):
        """Test reaching stop_distance ends the run before any generation."""
        cfg = small_search.model_copy(update={"stop_distance": 1.0})
        result = ga_search(one_qubit_k5, 6, gate_objective(H), cfg)
        assert result.evaluations == cfg.population_size

    def test_more_generations_never_worse(self, one_qubit_k5, small_search):
        """Test the best-ever word only improves with longer runs."""
        objective = gate_objective(H, "H")
        short = ga_search(one_qubit_k5, 15, objective, small_search.model_copy(update={"generations": 2}))
        long = ga_search(one_qubit_k5, 15, objective, small_search.model_copy(update={"generations": 20}))
        assert long.distance <= short.distance


class TestSelection:
    """Tests for tournament selection, distinct survivors and polishing."""

    def test_tournament_of_one_is_uniform_draw(self, rng):
        """Test size-1 tournaments return in-range indices of any rank."""
        scores = np.arange(50, dtype=float)
        winners = tournament_select(scores, 2000, 1, rng)
        assert winners.min() >= 0 and winners.max() < 50
        assert len(np.unique(winners)) > 40

    def test_tournament_prefers_low_scores(self, rng):
        """Test larger tournaments shift winners towards the best scores."""
        scores = rng.random(200)
        small = scores[tournament_select(scores, 4000, 1, rng)].mean()
        large = scores[tournament_select(scores, 4000, 5, rng)].mean()
        assert large < small

    def test_full_tournament_picks_best(self, rng):
        """Test a tournament covering every entrant with high probability finds the minimum."""
        scores = np.array([3.0, 1.0, 2.0])
        winners = tournament_select(scores, 10, 64, rng)
        assert np.all(winners == 1)

    def test_distinct_best_drops_repeats(self):
        """Test equal scores keep only their first index, in ascending score order."""
        scores = np.array([0.5, 0.1, 0.5, 0.1, 0.3, np.inf])
        np.testing.assert_array_equal(distinct_best(scores, 10), [1, 4, 0, 5])
        np.testing.assert_array_equal(distinct_best(scores, 2), [1, 4])

    def test_polish_reaches_single_letter_optimum(self, one_qubit_k5):
        """Test descent fixes one wrong letter of an exactly reachable target."""
        gens = one_qubit_k5.with_inverses()
        target = evaluate_braidword(gens.parse("ABAB"), gens).entries
        objective = gate_objective(target)
        with FitnessEvaluator(gens, objective) as fitness:
            start = gens.parse("ABAA").codes
            start_score = float(fitness(start[None])[0])
            word, score, used = polish(start, start_score, fitness, gens.alphabet_size, 3)
        assert score == pytest.approx(0.0, abs=1e-7)
        assert score < start_score
        assert used >= 4 * (gens.alphabet_size - 1)

    def test_polish_disabled(self, one_qubit_k5):
        """Test zero rounds returns the input untouched."""
        gens = one_qubit_k5
        with FitnessEvaluator(gens, gate_objective(H)) as fitness:
            word = np.array([0, 1, 0])
            out, score, used = polish(word, 0.7, fitness, gens.alphabet_size, 0)
        assert out is word and score == 0.7 and used == 0


class TestFitnessEvaluator:
    """Tests for threaded fitness evaluation."""

    def test_threads_match_sequential(self, one_qubit_k5, rng):
        """Test chunked threaded scoring equals one batched call."""
        gens = one_qubit_k5.with_inverses()
        words = rng.integers(0, gens.alphabet_size, size=(3 * FITNESS_CHUNK + 17, 12))
        objective = gate_objective(H)
        with FitnessEvaluator(gens, objective) as serial:
            expected = serial(words)
        with FitnessEvaluator(gens, objective, threads=4) as threaded:
            np.testing.assert_array_equal(threaded(words), expected)

    def test_ga_threads_give_same_result(self, two_qubit_k5, small_search):
        """Test worker count never changes the GA outcome."""
        cfg = small_search.model_copy(update={"population_size": 600, "survivors": 100})
        gens = two_qubit_k5.with_inverses()
        objective = class_objective(CNOT_CLASS)
        serial = ga_search(gens, 9, objective, cfg)
        threaded = ga_search(gens, 9, objective, cfg, threads=4)
        assert serial.word == threaded.word
        assert serial.distance == threaded.distance
        assert serial.evaluations == threaded.evaluations

    def test_all_immigrants(self, one_qubit_k5, small_search):
        """Test a population refilled entirely by random immigrants still runs."""
        cfg = small_search.model_copy(update={"immigrant_fraction": 1.0, "tournament_size": 1})
        result = ga_search(one_qubit_k5, 10, gate_objective(T, "T"), cfg)
        assert len(result.word) == 10
        assert np.isfinite(result.distance)


@pytest.mark.slow
class TestGaQuality:
    """Statistical quality checks with default settings."""

    def test_hadamard_k5(self, one_qubit_k5):
        """Test a length-30 H approximation reaches 0.05."""
        result = ga_search(one_qubit_k5.with_inverses(), 30, gate_objective(H, "H"), SearchConfig())
        assert result.distance <= 0.05

    @pytest.mark.parametrize("k", [5, 6, 7])
    def test_cnot_length_31(self, k):
        """Test the best of five length-31 GA runs reaches the [CNOT] class within 1e-5."""
        gens = two_qubit_generators(AnyonModel(k))
        objective = class_objective(CNOT_CLASS)
        results = [
            ga_search(gens, 31, objective, SearchConfig(rng_seed=seed), threads=resolve_threads(0))
            for seed in range(5)
        ]
        best = min(results, key=lambda r: r.distance)
        assert best.distance <= 1e-5
        assert best.leakage.m11 > 0.94
        assert best.leakage.dU < 0.1
