from .linalg import EchelonBasis, IntRow, Rational, SparseVec, in_span, rank, solve, sparse, to_integer_row

__all__ = [
    "EchelonBasis",
    "IntRow",
    "Rational",
    "SparseVec",
    "in_span",
    "rank",
    "solve",
    "sparse",
    "to_integer_row",
]
