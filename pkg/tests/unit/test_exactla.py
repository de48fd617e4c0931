from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from service.core.errors import InconsistentSystemError
from service.exactla import EchelonBasis, in_span, rank, solve, sparse, to_integer_row

pytestmark = pytest.mark.unit

small_rows = st.lists(
    st.dictionaries(st.integers(0, 5), st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4),
    max_size=6,
)


def test_sparse_drops_zeros():
    assert sparse({0: 0, 1: Fraction(1, 2), 2: 0}) == {1: Fraction(1, 2)}


def test_to_integer_row_is_primitive():
    row, scale = to_integer_row({0: Fraction(1, 2), 3: Fraction(-3, 4)})
    assert row == {0: 2, 3: -3}
    assert scale == 4


def test_to_integer_row_of_zero():
    assert to_integer_row({}) == ({}, Fraction(1))


def test_dependent_rows_do_not_raise_rank():
    basis = EchelonBasis()
    assert basis.add({0: 1, 1: 1})
    assert not basis.add({0: 2, 1: 2})
    assert basis.add({1: 1, 2: 1})
    assert basis.rank == 2
    assert basis.contains({0: 1, 1: 2, 2: 1})
    assert not basis.contains({2: 1})


def test_rank_of_identity_block():
    assert rank([{i: 1} for i in range(5)]) == 5
    assert rank([]) == 0


def test_in_span():
    rows = [{0: 1, 1: -1}, {1: 1, 2: -1}]
    assert in_span({0: 1, 2: -1}, rows)
    assert not in_span({0: 1}, rows)


def test_normal_form_vanishes_on_pivots():
    basis = EchelonBasis()
    basis.extend([{0: 1, 1: 1}, {1: 1, 2: 1}])
    form = basis.normal_form({0: 3, 1: 0, 2: 0, 3: 5})
    assert all(pivot not in form for pivot in basis.pivots)
    assert form[3] == 5


def test_coordinates_reconstruct_vector():
    basis = EchelonBasis()
    basis.extend([{0: 2, 1: 4}, {1: 1, 2: 3}])
    v = {0: 2, 1: 5, 2: 3}
    assert basis.contains(v)
    coordinates = basis.coordinates(v)
    rebuilt: dict[int, Fraction] = {}
    for pivot, c in coordinates.items():
        for column, value in basis.row(pivot).items():
            rebuilt[column] = rebuilt.get(column, 0) + c * value
    assert sparse(rebuilt) == sparse(v)


def test_copy_is_independent():
    basis = EchelonBasis()
    basis.add({0: 1})
    clone = basis.copy()
    clone.add({1: 1})
    assert basis.rank == 1
    assert clone.rank == 2


def test_solve_overdetermined():
    matrix = [[1, 1], [1, -1], [2, 0]]
    assert solve(matrix, [3, 1, 4]) == [Fraction(2), Fraction(1)]


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystemError):
        solve([[1, 1], [1, 1]], [1, 2])


def test_solve_rational_coefficients():
    assert solve([[Fraction(1, 2), 0], [0, 3]], [1, 1]) == [Fraction(2), Fraction(1, 3)]


@settings(max_examples=60, deadline=None)
@given(small_rows)
def test_rank_is_order_independent(rows):
    assert rank(rows) == rank(list(reversed(rows)))


@settings(max_examples=60, deadline=None)
@given(small_rows)
def test_every_row_lies_in_span(rows):
    basis = EchelonBasis()
    basis.extend(rows)
    assert all(basis.contains(row) for row in rows)
    assert basis.rank <= min(len(rows), 6)
