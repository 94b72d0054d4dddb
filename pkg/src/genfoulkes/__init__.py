"""Exact computations with generalized Foulkes modules of the symmetric group."""

from ._config import BoundExceeded
from .characters import character, character_table, decompose_bipartite, decompose_class_function
from .foulkes import (
    FoulkesSpec,
    Report,
    check_foulkes_conjecture,
    count_P_lambda,
    foulkes_decomposition,
    kronecker,
    u_decomposition,
)
from .partitions import conjugate, partitions_of
from .symfun import lr_coefficient, plethysm_h, restrict
from .vectors import BipartiteDecomposition, SchurVector

__version__ = "0.1.0"

__all__ = [
    "BipartiteDecomposition",
    "BoundExceeded",
    "FoulkesSpec",
    "Report",
    "SchurVector",
    "character",
    "character_table",
    "check_foulkes_conjecture",
    "conjugate",
    "count_P_lambda",
    "decompose_bipartite",
    "decompose_class_function",
    "foulkes_decomposition",
    "kronecker",
    "lr_coefficient",
    "partitions_of",
    "plethysm_h",
    "restrict",
    "u_decomposition",
]
