"""Exact sparse linear algebra over the rationals.

Rows are sparse mappings ``column -> coefficient``. Internally every row is kept as a
primitive integer row and the basis is held in reduced echelon form, so reducing a new
row against the basis only ever touches pivot columns present in the row itself.
"""
import logging
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import TypeAlias

from service.core.errors import InconsistentSystemError

logger = logging.getLogger("service.exactla.linalg")

Rational: TypeAlias = Fraction
SparseVec: TypeAlias = dict[int, Fraction]
IntRow: TypeAlias = dict[int, int]


def sparse(entries: Mapping[int, Fraction | int]) -> SparseVec:
    """Returns a SparseVec without stored zeros."""
    return {column: Fraction(value) for column, value in entries.items() if value}


def to_integer_row(v: Mapping[int, Fraction | int]) -> tuple[IntRow, Fraction]:
    """
    Scales a rational row to a primitive integer row.

    Args:
        v (Mapping[int, Fraction | int]): Sparse row.

    Returns:
        tuple[IntRow, Fraction]: ``(row, scale)`` with ``row == scale * v`` entrywise.
    """
    items = [(column, value) for column, value in v.items() if value]
    if not items:
        return {}, Fraction(1)
    denominator = lcm(*(Fraction(value).denominator for _, value in items))
    scaled = {column: int(Fraction(value) * denominator) for column, value in items}
    divisor = reduce(gcd, scaled.values())
    return {column: value // divisor for column, value in scaled.items()}, Fraction(denominator, divisor)


def _primitive(row: IntRow) -> tuple[IntRow, int]:
    divisor = reduce(gcd, row.values())
    if divisor == 1:
        return row, 1
    return {column: value // divisor for column, value in row.items()}, divisor


def _combine(target: IntRow, target_factor: int, source: IntRow, source_factor: int) -> IntRow:
    """Returns ``target_factor * target - source_factor * source`` without zeros."""
    if target_factor == 1:
        result = dict(target)
    else:
        result = {column: value * target_factor for column, value in target.items()}
    for column, value in source.items():
        updated = result.get(column, 0) - source_factor * value
        if updated:
            result[column] = updated
        else:
            result.pop(column, None)
    return result


class EchelonBasis:
    """
    Incrementally built basis of a subspace in reduced echelon form.

    Every stored row has a positive entry at its pivot column and zeros at every other
    pivot column. ``_occurs`` maps each non-pivot column to the pivots of the rows that
    have a nonzero entry there, so a new pivot can be cleared from the basis without
    scanning all rows.

    The pivot of a new row is its entry of smallest magnitude, ties broken by the fewest
    basis rows touching that column and then by the lowest column index. All choices are
    deterministic, so ranks and normal forms do not depend on scheduling.

    Examples:
        >>> basis = EchelonBasis()
        >>> basis.add({0: 1, 1: 1})
        True
        >>> basis.add({0: 2, 1: 2})
        False
        >>> basis.rank
        1
    """

    def __init__(self) -> None:
        self._rows: dict[int, IntRow] = {}
        self._occurs: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def row(self, pivot: int) -> IntRow:
        return dict(self._rows[pivot])

    def copy(self) -> "EchelonBasis":
        clone = EchelonBasis()
        clone._rows = {pivot: dict(row) for pivot, row in self._rows.items()}
        clone._occurs = {column: set(pivots) for column, pivots in self._occurs.items()}
        return clone

    def _reduce(self, row: IntRow) -> tuple[IntRow, Fraction]:
        """Returns ``(r, s)`` with ``r == s * (row - combination of basis rows)`` and no pivot in ``r``."""
        remainder = row
        scale = Fraction(1)
        for column in [column for column in row if column in self._rows]:
            a = remainder[column]
            basis_row = self._rows[column]
            d = basis_row[column]
            g = gcd(a, d)
            remainder = _combine(remainder, d // g, basis_row, a // g)
            scale *= d // g
        if remainder:
            remainder, divisor = _primitive(remainder)
            scale /= divisor
        return remainder, scale

    def reduce(self, v: Mapping[int, Fraction | int]) -> IntRow:
        """Returns the primitive integer remainder of ``v`` modulo the basis (empty when in span)."""
        row, _ = to_integer_row(v)
        return self._reduce(row)[0]

    def normal_form(self, v: Mapping[int, Fraction | int]) -> SparseVec:
        """
        Returns the exact normal form of ``v``: the unique representative of ``v`` modulo the
        span that vanishes on every pivot column.
        """
        row, row_scale = to_integer_row(v)
        remainder, scale = self._reduce(row)
        factor = scale * row_scale
        return {column: Fraction(value) / factor for column, value in remainder.items()}

    def contains(self, v: Mapping[int, Fraction | int]) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
        """
        Coordinates of a vector of the span with respect to the stored rows, keyed by pivot.

        Only valid for vectors in the span; reduced echelon form makes the coordinate of the
        row with pivot ``c`` equal to ``v[c] / row[c]``.
        """
        return {
            pivot: Fraction(v[pivot]) / self._rows[pivot][pivot]
            for pivot in self._rows
            if v.get(pivot)
        }

    def add(self, v: Mapping[int, Fraction | int]) -> bool:
        """
        Adds ``v`` to the basis.

        Args:
            v (Mapping[int, Fraction | int]): Sparse row.

        Returns:
            bool: True if the rank grew, False if ``v`` was already in the span.
        """
        row, _ = to_integer_row(v)
        remainder, _ = self._reduce(row)
        if not remainder:
            return False
        pivot = min(remainder, key=lambda column: (abs(remainder[column]), len(self._occurs.get(column, ())), column))
        if remainder[pivot] < 0:
            remainder = {column: -value for column, value in remainder.items()}
        for other in sorted(self._occurs.pop(pivot, ())):
            old = self._rows[other]
            a = old[pivot]
            d = remainder[pivot]
            g = gcd(a, d)
            updated, _ = _primitive(_combine(old, d // g, remainder, a // g))
            if updated[other] < 0:
                updated = {column: -value for column, value in updated.items()}
            self._replace(other, old, updated)
        self._rows[pivot] = remainder
        for column in remainder:
            if column != pivot:
                self._occurs.setdefault(column, set()).add(pivot)
        return True

    def _replace(self, pivot: int, old: IntRow, new: IntRow) -> None:
        for column in old.keys() - new.keys():
            if column != pivot and (holders := self._occurs.get(column)) is not None:
                holders.discard(pivot)
        for column in new.keys() - old.keys():
            if column != pivot:
                self._occurs.setdefault(column, set()).add(pivot)
        self._rows[pivot] = new

    def extend(self, rows: Iterable[Mapping[int, Fraction | int]]) -> int:
        """Adds every row and returns how many of them increased the rank."""
        return sum(1 for row in rows if self.add(row))


def rank(rows: Iterable[Mapping[int, Fraction | int]]) -> int:
    """Dimension of the rational span of ``rows``."""
    basis = EchelonBasis()
    basis.extend(rows)
    return basis.rank


def in_span(v: Mapping[int, Fraction | int], rows: Iterable[Mapping[int, Fraction | int]]) -> bool:
    """True iff ``v`` lies in the rational span of ``rows``."""
    basis = EchelonBasis()
    basis.extend(rows)
    return basis.contains(v)


def solve(matrix: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]) -> list[Fraction]:
    """
    Solves ``matrix @ x = rhs`` exactly.

    The system may be overdetermined; free variables (if any) are set to zero.

    Args:
        matrix (Sequence[Sequence[Fraction | int]]): Dense coefficient rows.
        rhs (Sequence[Fraction | int]): Right hand side, one entry per row.

    Returns:
        list[Fraction]: A solution vector.

    Raises:
        InconsistentSystemError: If the system has no solution.
    """
    if len(matrix) != len(rhs):
        raise InconsistentSystemError(f"{len(matrix)} rows but {len(rhs)} right hand sides")
    if not matrix:
        return []
    width = len(matrix[0])
    rows = [[Fraction(value) for value in row] + [Fraction(b)] for row, b in zip(matrix, rhs, strict=True)]
    pivot_columns: list[int] = []
    top = 0
    for column in range(width):
        candidates = [i for i in range(top, len(rows)) if rows[i][column] != 0]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (abs(rows[i][column].numerator), i))
        rows[top], rows[best] = rows[best], rows[top]
        pivot = rows[top][column]
        rows[top] = [value / pivot for value in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][column] != 0:
                factor = rows[i][column]
                rows[i] = [value - factor * pivot_value for value, pivot_value in zip(rows[i], rows[top], strict=True)]
        pivot_columns.append(column)
        top += 1
        if top == len(rows):
            break
    for row in rows[top:]:
        if row[-1] != 0:
            raise InconsistentSystemError("linear system is inconsistent")
    solution = [Fraction(0)] * width
    for i, column in enumerate(pivot_columns):
        solution[column] = rows[i][-1]
    return solution
