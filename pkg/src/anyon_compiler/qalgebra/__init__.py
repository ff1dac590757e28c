"""q-deformed SU(2) representation theory at level k."""

from anyon_compiler.qalgebra.qnumbers import (
    DoubledSpin,
    QExponent,
    deformation_parameter,
    q_factorial,
    q_integer,
)
from anyon_compiler.qalgebra.symbols import (
    SymbolTable,
    f_matrix,
    f_symbol,
    fusion_channels,
    is_admissible,
    q_six_j,
    r_exponent,
    r_symbol,
    symbol_table,
    triangle_delta,
)

__all__ = [
    "DoubledSpin",
    "QExponent",
    "SymbolTable",
    "deformation_parameter",
    "f_matrix",
    "f_symbol",
    "fusion_channels",
    "is_admissible",
    "q_factorial",
    "q_integer",
    "q_six_j",
    "r_exponent",
    "r_symbol",
    "symbol_table",
    "triangle_delta",
]
