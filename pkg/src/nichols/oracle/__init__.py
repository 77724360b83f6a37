"""Brute-force Nichols algebra computations used as ground truth."""

from .hilbert import (
    PbwDatum,
    ReflectionCheck,
    check_reflection_roots,
    graded_dimension,
    hilbert_data,
    multidegrees,
    oracle_roots,
    pbw_infer,
    series_from_pbw,
)
from .rank import evaluation_rank, integer_rank, laurent_rank, matrix_rank
from .symmetrizer import in_kernel, symmetrize, symmetrizer_block
from .words import (
    WordVector,
    ad_power,
    braiding_inverse_swap,
    braiding_swap,
    pairing,
    skew_diff,
    words_of_degree,
)

__all__ = [
    "PbwDatum",
    "ReflectionCheck",
    "WordVector",
    "ad_power",
    "braiding_inverse_swap",
    "braiding_swap",
    "check_reflection_roots",
    "evaluation_rank",
    "graded_dimension",
    "hilbert_data",
    "in_kernel",
    "integer_rank",
    "laurent_rank",
    "matrix_rank",
    "multidegrees",
    "oracle_roots",
    "pairing",
    "pbw_infer",
    "series_from_pbw",
    "skew_diff",
    "symmetrize",
    "symmetrizer_block",
    "words_of_degree",
]
