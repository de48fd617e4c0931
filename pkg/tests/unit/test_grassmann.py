from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from service.core.errors import DimensionMismatchError, UnsupportedError
from service.grassmann import (
    GrassmannElem,
    GrassmannTensor,
    TensorElem,
    gcommutator,
    generator,
    gmul,
    inversions,
    monomial,
    monomial_product,
    render_monomial,
    tmul,
    unit,
)

pytestmark = pytest.mark.unit


def test_generators_anticommute():
    e1, e2 = generator(1, 4), generator(2, 4)
    assert gmul(e1, e2) == -gmul(e2, e1)
    assert gmul(e1, e1).is_zero()


def test_monomial_product_sign():
    assert monomial_product(0b01, 0b10) == (1, 0b11)
    assert monomial_product(0b10, 0b01) == (-1, 0b11)
    assert monomial_product(0b11, 0b10) == (0, 0)


def test_inversions_counts_pairs():
    assert inversions(0b110, 0b001) == 2
    assert inversions(0b001, 0b110) == 0


def test_monomial_respects_order():
    assert monomial([2, 1], 3) == -monomial([1, 2], 3)
    assert render_monomial(0b101) == "e1e3"
    assert render_monomial(0) == "1"


def test_generator_beyond_dimension():
    with pytest.raises(DimensionMismatchError):
        generator(3, 2)


def test_generator_index_starts_at_one():
    with pytest.raises(UnsupportedError):
        generator(0, 2)


def test_mixed_dimensions_do_not_multiply():
    with pytest.raises(DimensionMismatchError):
        gmul(generator(1, 2), generator(1, 3))


def test_commutator_of_odd_elements_doubles():
    e1, e2 = generator(1, None), generator(2, None)
    assert gcommutator(e1, e2) == 2 * gmul(e1, e2)


def test_even_elements_are_central():
    e12 = monomial([1, 2], 4)
    assert gcommutator(e12, generator(3, 4)).is_zero()
    assert e12.is_even()


def test_string_rendering():
    element = unit(2) + 2 * generator(1, 2) - generator(2, 2)
    assert str(element) == "1 + 2*e1 - e2"
    assert str(GrassmannElem(2)) == "0"


def test_tensor_product_has_no_sign_between_slots():
    algebra = GrassmannTensor([2, 2])
    a = algebra.generator(0, 1)
    b = algebra.generator(1, 1)
    assert tmul(a, b) == tmul(b, a)
    assert algebra.commutator(a, b).is_zero()


def test_lie_equal_witness_k1():
    algebra = GrassmannTensor([2, 2])
    e1, e2 = generator(1, 2), generator(2, 2)
    args = [algebra.pure(e1, unit(2)), algebra.pure(e2, e1), algebra.pure(unit(2), e2)]
    value = algebra.commutator(algebra.commutator(args[0], args[1]), args[2])
    assert value == algebra.monomial((0b11, 0b11), 4)


def test_pure_needs_every_slot():
    with pytest.raises(DimensionMismatchError):
        GrassmannTensor([2, 2]).pure(unit(2))


def test_embed_checks_dimension():
    with pytest.raises(DimensionMismatchError):
        GrassmannTensor([2, None]).embed(0, generator(1, None))


def test_tensor_slot_count_checked():
    with pytest.raises(DimensionMismatchError):
        TensorElem((2, 2), {(1,): Fraction(1)})


def test_empty_tensor_product_rejected():
    with pytest.raises(UnsupportedError):
        GrassmannTensor([])


def test_tensor_rendering():
    algebra = GrassmannTensor([2, None])
    element = algebra.add(algebra.one(), algebra.scale(algebra.pure(generator(1, 2), generator(3, None)), 3))
    assert str(element) == "1 ⊗ 1 + 3*(e1 ⊗ e3)"


subsets = st.lists(st.integers(1, 6), unique=True, max_size=6)


@given(subsets, subsets)
def test_product_sign_matches_reordering(a, b):
    left = monomial(sorted(a), 6)
    right = monomial(sorted(b), 6)
    assert gmul(left, right) == monomial(sorted(a) + sorted(b), 6)


@given(subsets, subsets, subsets)
def test_associativity(a, b, c):
    x, y, z = (monomial(s, 6) + unit(6) for s in (a, b, c))
    assert gmul(gmul(x, y), z) == gmul(x, gmul(y, z))
