"""SU(2)_k anyon models and their elementary braiding matrices."""

from anyon_compiler.anyons.braidword import Braidword, alphabet, has_free_cancellation
from anyon_compiler.anyons.evaluation import (
    braid_relation_residuals,
    evaluate_braidword,
    evaluate_codes,
    split_blocks,
)
from anyon_compiler.anyons.fusion import FusionPath, fusion_chain_basis, fusion_chain_generator
from anyon_compiler.anyons.generators import (
    fusion_chain_generators,
    generators,
    one_qubit_basis,
    one_qubit_generators,
    two_qubit_basis,
    two_qubit_generators,
)
from anyon_compiler.anyons.model import (
    ONE_QUBIT_BASIS,
    TWO_QUBIT_BASIS,
    AnyonModel,
    BraidMatrix,
    Encoding,
    GeneratorSet,
)

__all__ = [
    "ONE_QUBIT_BASIS",
    "TWO_QUBIT_BASIS",
    "AnyonModel",
    "BraidMatrix",
    "Braidword",
    "Encoding",
    "FusionPath",
    "GeneratorSet",
    "alphabet",
    "braid_relation_residuals",
    "evaluate_braidword",
    "evaluate_codes",
    "fusion_chain_basis",
    "fusion_chain_generator",
    "fusion_chain_generators",
    "generators",
    "has_free_cancellation",
    "one_qubit_basis",
    "one_qubit_generators",
    "split_blocks",
    "two_qubit_basis",
    "two_qubit_generators",
]
