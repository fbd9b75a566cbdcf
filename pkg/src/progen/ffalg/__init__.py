"""Exact linear algebra over small finite fields."""

from .field import GF, FieldSpec, canonical_modulus, embedding, gf, is_irreducible, prime_power
from .linalg import Echelon, inverse, left_nullspace, nullspace, row_basis, solve_left
from .matrix import Matrix, kernel, kron, rank, rref, solve
from .sparse import SparseMatrix, sparse_rank

__all__ = [
    "GF",
    "FieldSpec",
    "Matrix",
    "SparseMatrix",
    "Echelon",
    "gf",
    "canonical_modulus",
    "embedding",
    "is_irreducible",
    "prime_power",
    "rref",
    "rank",
    "kernel",
    "solve",
    "solve_left",
    "kron",
    "inverse",
    "nullspace",
    "left_nullspace",
    "row_basis",
    "sparse_rank",
]
