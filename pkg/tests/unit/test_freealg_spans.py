from math import factorial

import pytest

from service.core.errors import SizeGuardError, UnsupportedError
from service.freealg import (
    FreeAlgebraService,
    MultilinearPoly,
    check_lemma_instances,
    check_product_inclusion,
    commutator_of_variables,
    derangements,
    ideal_basis,
    ideal_multilinear_span,
    module_span_dim,
    product_span,
    proper_dimension,
    proper_span,
    quotient_character,
    quotient_dims,
    x,
)
from service.freealg.spans import _proper_rank

pytestmark = pytest.mark.unit


def test_ideal_span_of_triple_commutators():
    span = ideal_multilinear_span(3, 3)
    assert span
    assert ideal_basis(3, 3).rank == 2


def test_ideal_span_empty_above_degree():
    assert ideal_multilinear_span(4, 3) == []
    assert ideal_basis(4, 3).rank == 0


def test_ideal_span_needs_p_two():
    with pytest.raises(UnsupportedError):
        ideal_multilinear_span(1, 3)


def test_ideal_two_is_everything_but_the_symmetric_part():
    assert ideal_basis(2, 3).rank == factorial(3) - 1


def test_ideal_basis_is_a_copy():
    basis = ideal_basis(3, 3)
    basis.add({0: 1})
    assert ideal_basis(3, 3).rank == 2


def test_product_span_degree():
    assert product_span(2, 2, 3) == []
    assert all(f.degree == 4 for f in product_span(2, 2, 4))
    with pytest.raises(UnsupportedError):
        product_span(1, 2, 4)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        ideal_multilinear_span(2, 8)
    with pytest.raises(SizeGuardError):
        proper_span(4, max_degree=3)


@pytest.mark.parametrize(("n", "expected"), [(0, 1), (1, 0), (2, 1), (3, 2), (4, 9), (5, 44), (6, 265), (7, 1854)])
def test_derangements(n, expected):
    assert derangements(n) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_proper_rank_matches_derangements(n):
    assert _proper_rank(n) == derangements(n)


def test_proper_dimension_switches_to_closed_form():
    assert proper_dimension(0) == 1
    assert proper_dimension(1) == 0
    assert proper_dimension(9, exact_max_degree=4) == 133496


def test_proper_span_members_are_products_of_commutators():
    (only,) = proper_span(2)
    assert only.poly == commutator_of_variables(1, 2)


@pytest.mark.parametrize(("n", "expected"), [(2, (2, 1)), (3, (4, 0)), (4, (8, 1))])
def test_quotient_dims_of_nilpotency_two(n, expected):
    assert quotient_dims(n, 2) == expected


def test_quotient_dims_needs_p_two():
    with pytest.raises(UnsupportedError):
        quotient_dims(3, 1)


def test_module_span_dim():
    assert module_span_dim(MultilinearPoly.of(commutator_of_variables(1, 2)), 2) == 1
    assert module_span_dim(MultilinearPoly.of(x(1) * x(2)), 2) == 2
    assert module_span_dim(MultilinearPoly.of(commutator_of_variables(1, 2, 3)), 2) == 0


def test_even_quotient_character_is_sign():
    assert quotient_character(4, 2, [(1, 2, 3, 4), (2, 1, 3, 4), (2, 3, 4, 1)]) == [1, -1, -1]


def test_product_inclusion_holds():
    report = check_product_inclusion(3, 2, 5)
    assert report.statement == "I_3·I_2 ⊂ I_4"
    assert report.checked > 0
    assert report.holds


def test_product_inclusion_detects_failures():
    report = check_product_inclusion(2, 2, 4, target=3)
    assert report.checked > 0
    assert not report.holds


def test_lemma_checks_every_generator():
    report = check_lemma_instances(2, 5)
    assert report.statement == "[I_2, x, y] ⊂ I_4"
    assert report.checked == len(ideal_multilinear_span(2, 3))


def test_bracket_inclusion_with_a_lower_target():
    default = check_lemma_instances(3, 6)
    assert default.statement == "[I_3, x, y] ⊂ I_5"
    lower = check_lemma_instances(3, 6, target=4)
    assert lower.statement == "[I_3, x, y] ⊂ I_4"
    assert lower.checked == default.checked > 0
    assert lower.holds


def test_bracket_inclusion_rejects_target():
    with pytest.raises(UnsupportedError):
        check_lemma_instances(3, 6, target=1)


@pytest.mark.asyncio
async def test_service_lemma_passes_target():
    report = await FreeAlgebraService().lemma(3, 6, 4)
    assert report.statement == "[I_3, x, y] ⊂ I_4"
    assert report.holds


@pytest.mark.asyncio
async def test_service_quotient_dims():
    entity = await FreeAlgebraService().quotient_dims(3, 2)
    assert (entity.c, entity.gamma) == (4, 0)


@pytest.mark.asyncio
async def test_service_module_span():
    entity = await FreeAlgebraService().module_span("[x1,x2]", 2)
    assert entity.degree == 2
    assert entity.dim == 1


@pytest.mark.asyncio
async def test_service_respects_guard():
    with pytest.raises(SizeGuardError):
        await FreeAlgebraService(max_degree=3).quotient_dims(4, 2)
