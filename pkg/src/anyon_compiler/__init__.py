"""anyon-compiler: braidword compilation for SU(2)_k anyon models.

This package builds elementary braiding matrices for one- and two-qubit
encodings of spin-1/2 anyons at any level k >= 3, and compiles gates into
braidwords with three engines:

- Pruned exhaustive enumeration of fixed-length words
- A genetic algorithm over fixed-length words
- A GA-seeded Solovay-Kitaev recursion for one-qubit gates
"""

__version__ = "0.1.0"

from anyon_compiler.anyons import (
    AnyonModel,
    Braidword,
    Encoding,
    GeneratorSet,
    evaluate_braidword,
    one_qubit_generators,
    two_qubit_generators,
)
from anyon_compiler.core.config import CompilerConfig
from anyon_compiler.models import CompilationResult, Engine, RunConfig, SearchConfig, SweepSpec

__all__ = [
    # Version
    "__version__",
    # Models
    "AnyonModel",
    "Braidword",
    "CompilationResult",
    "CompilerConfig",
    "Encoding",
    "Engine",
    "GeneratorSet",
    "RunConfig",
    "SearchConfig",
    "SweepSpec",
    # Operations
    "evaluate_braidword",
    "one_qubit_generators",
    "two_qubit_generators",
]
