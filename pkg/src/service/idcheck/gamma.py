"""Proper codimensions γ_n(A) as ranks of the evaluation map on Γ_n."""
import logging
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Literal, TypeAlias

import numpy as np

from service.algebras import AlgebraElem, AlgebraSpec, materialize
from service.core.errors import UnsupportedError
from service.exactla import EchelonBasis
from service.freealg import MultilinearPoly, proper_span

from .brute import basis_tuples
from .parity import capacities_of, sign_table, slot_masks

logger = logging.getLogger("service.idcheck.gamma")

GammaMethod: TypeAlias = Literal["parity", "direct"]


def proper_basis(n: int, *, max_degree: int | None = None) -> list[MultilinearPoly]:
    """An independent subset of the proper spanning set, in enumeration order."""
    basis = EchelonBasis()
    return [f for f in proper_span(n, max_degree=max_degree) if basis.add(f.vector())]


def _integer_matrix(rows: list[MultilinearPoly], n: int) -> np.ndarray:
    matrix = np.zeros((len(rows), factorial(n)), dtype=np.int64)
    for r, f in enumerate(rows):
        for column, value in f.vector().items():
            matrix[r, column] = int(value)
    return matrix


def _column_rank(matrix: np.ndarray) -> int:
    echelon = EchelonBasis()
    for column in matrix.T:
        if column.any():
            echelon.add({r: int(v) for r, v in enumerate(column) if v})
            if echelon.rank == matrix.shape[0]:
                break
    return echelon.rank


def _parity_gamma(rows: list[MultilinearPoly], spec: AlgebraSpec, n: int) -> int:
    """
    The sign vector of a pattern P is the pointwise product of the per-slot sign columns, and
    S_f(P) is the dot product of f's coefficients with it, so the pattern matrix is a
    Khatri-Rao product of the slot sign tables.
    """
    capacities = capacities_of(spec)
    words = [tuple(word) for word in permutations(range(1, n + 1))]
    patterns = np.ones((len(words), 1), dtype=np.int64)
    for capacity in capacities:
        table = sign_table(words, n, slot_masks(n, capacity))
        patterns = (patterns[:, :, None] * table[:, None, :]).reshape(len(words), -1)
    values = _integer_matrix(rows, n) @ patterns
    logger.debug(f"Evaluated {values.shape[0]} proper polynomials on {values.shape[1]} parity patterns")
    return _column_rank(values)


def _direct_gamma(rows: list[MultilinearPoly], spec: AlgebraSpec, n: int, max_dim: int | None, max_tuples: int | None) -> int:
    algebra = materialize(spec, max_dim=max_dim, unbounded_rank=n)
    words = [tuple(word) for word in permutations(range(1, n + 1))]
    coefficients = [f.poly.terms for f in rows]
    echelon = EchelonBasis()
    visited = 0
    for chosen in basis_tuples(algebra, n, [False] * n, max_tuples=max_tuples):
        visited += 1
        args = [algebra.basis(b) for b in chosen]
        prefixes: dict[tuple[int, ...], AlgebraElem] = {(): algebra.one()}
        for word in words:
            for length in range(1, n + 1):
                if word[:length] not in prefixes:
                    prefixes[word[:length]] = algebra.mul(prefixes[word[:length - 1]], args[word[length - 1] - 1])
        values = []
        for terms in coefficients:
            value: dict[int, Fraction] = {}
            for word, c in terms.items():
                for k, v in prefixes[word].terms.items():
                    value[k] = value.get(k, 0) + c * v
            values.append(value)
        for k in {k for value in values for k in value}:
            echelon.add({r: value[k] for r, value in enumerate(values) if value.get(k)})
        if echelon.rank == len(rows):
            break
    logger.debug(f"Evaluated proper polynomials on {visited} basis tuples of {algebra.name}")
    return echelon.rank


def identity_gamma(spec: AlgebraSpec, n: int, method: GammaMethod = "parity", *, max_dim: int | None = None, max_tuples: int | None = None, max_degree: int | None = None) -> int:
    """
    γ_n(A), the dimension of Γ_n modulo the identities of A.

    A proper polynomial is an identity exactly when all of its evaluations vanish, so γ_n(A)
    is the rank of the matrix whose rows are a basis of Γ_n and whose columns are the
    evaluations: S(P) per parity pattern for ``parity``, basis coordinates of the values on
    basis tuples of the materialized algebra for ``direct``. Unit entries are skipped since
    every proper polynomial vanishes when a variable is replaced by 1.

    Args:
        spec (AlgebraSpec): The algebra; ``parity`` needs Grassmann slots only.
        n (int): Degree.
        method (GammaMethod): ``parity`` or ``direct``.
        max_dim (int | None): Dimension cap for ``direct``.
        max_tuples (int | None): Basis tuple guard for ``direct``.
        max_degree (int | None): Degree guard override.

    Returns:
        int: γ_n(A).

    Raises:
        UnsupportedError: For ``parity`` on non-Grassmann slots or an unknown method.
        SizeGuardError: If a guard is exceeded.
    """
    if n <= 1:
        return 1 - n
    rows = proper_basis(n, max_degree=max_degree)
    if method == "parity":
        gamma = _parity_gamma(rows, spec, n)
    elif method == "direct":
        gamma = _direct_gamma(rows, spec, n, max_dim, max_tuples)
    else:
        raise UnsupportedError(f"unknown method {method}")
    logger.info(f"gamma_{n}({spec}) = {gamma} ({method})")
    return gamma
