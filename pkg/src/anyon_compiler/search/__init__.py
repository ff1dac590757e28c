"""Braidword compilation engines."""

from anyon_compiler.search.commutator import GcPair, commutator_angle, gc_decompose, to_bloch
from anyon_compiler.search.exhaustive import (
    DEFAULT_MAX_CANDIDATES,
    candidate_count,
    enumerate_words,
    exhaustive_search,
)
from anyon_compiler.search.genetic import (
    FitnessEvaluator,
    crossover,
    distinct_best,
    ga_search,
    mutate,
    polish,
    tournament_select,
)
from anyon_compiler.search.solovay_kitaev import solovay_kitaev

__all__ = [
    "DEFAULT_MAX_CANDIDATES",
    "FitnessEvaluator",
    "GcPair",
    "candidate_count",
    "commutator_angle",
    "crossover",
    "distinct_best",
    "enumerate_words",
    "exhaustive_search",
    "ga_search",
    "gc_decompose",
    "mutate",
    "polish",
    "solovay_kitaev",
    "to_bloch",
    "tournament_select",
]
