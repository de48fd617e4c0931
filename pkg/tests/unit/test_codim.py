from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from service.codim import (
    N,
    BoundSpec,
    CodimensionService,
    QPoly,
    QuasiPoly,
    binom_transform,
    bound_poly,
    bound_spec,
    catalan,
    catalan_lead,
    closed_form,
    codim_table,
    combined_bounds,
    did_spec,
    m_il_dim,
    module_degree,
    module_partition,
)
from service.core.errors import DimensionMismatchError, UnsupportedError, VerificationError
from service.freealg import FreeAlgebraService, derangements
from service.reptheory import Partition, RepresentationService, hook_dim

pytestmark = pytest.mark.unit


def test_qpoly_strips_trailing_zeros():
    assert QPoly.of(1, 0, 0) == QPoly.of(1)
    assert QPoly.of(1, 0, 0).degree == 0
    assert QPoly().degree == -1
    assert QPoly().lead == 0
    assert QPoly.of(0, 0).is_zero()


def test_qpoly_arithmetic():
    p = QPoly.of(0, -2, 1)
    assert p(5) == 15
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert p + QPoly.of(1, 2) == QPoly.of(1, 0, 1)
    assert str(p) == "n**2 - 2*n"
    assert str(QPoly()) == "0"
    assert p.to_list() == ["0", "-2", "1"]


def test_qpoly_interpolate():
    assert QPoly.interpolate([(0, 1), (1, 2), (2, 5)]) == QPoly.of(1, 0, 1)
    assert QPoly.interpolate([(3, Fraction(1, 2))]) == QPoly.of(Fraction(1, 2))


def test_qpoly_from_sympy():
    assert QPoly.from_sympy(N**2 / 2 + 1) == QPoly.of(1, 0, Fraction(1, 2))
    assert QPoly.from_sympy(sympy.ff(N, 2)) == QPoly.of(0, -1, 1)
    with pytest.raises(UnsupportedError):
        QPoly.from_sympy(1 / N)
    with pytest.raises(UnsupportedError):
        QPoly.from_sympy(sympy.sqrt(2) * N)


def test_quasi_poly():
    form = QuasiPoly(QPoly.of(1), QPoly.of(-1))
    assert form(3) == 7
    assert str(form) == "2^n*(1) + (-1)"


def test_catalan():
    assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    with pytest.raises(UnsupportedError):
        catalan(-1)


@given(st.integers(0, 12))
def test_binomial_transform_of_derangements_is_factorial(n):
    assert binom_transform(derangements, n) == factorial(n)


@given(st.integers(0, 20))
def test_binomial_transform_of_constant(n):
    assert binom_transform(lambda l: 1, n) == 2**n


@pytest.mark.parametrize(("i", "l", "n", "parity", "dim"), [(1, 0, 3, "odd", 6), (2, 0, 3, "odd", 5), (3, 0, 3, "odd", 4), (1, 0, 2, "even", 3), (1, 1, 4, "odd", 35)])
def test_m_il_dim_values(i, l, n, parity, dim):
    assert m_il_dim(i, l, n, parity) == dim


@pytest.mark.parametrize("parity", ["odd", "even"])
@pytest.mark.parametrize("i", [1, 2, 3])
@pytest.mark.parametrize("l", [0, 1, 2])
def test_m_il_dim_is_hook_dimension(i, l, parity):
    for n in range(l + 3, l + 7):
        T = module_degree(n, parity)
        assert m_il_dim(i, l, n, parity) == hook_dim(module_partition(i, l, T))


def test_module_partition():
    assert module_partition(1, 1, 7) == Partition.of(4, 2, 1)
    assert module_partition(2, 0, 6) == Partition.of(2, 2, 1, 1)
    assert module_partition(3, 2, 7) == Partition.of(4, 3)


@pytest.mark.parametrize(("i", "l", "n", "parity"), [(1, 0, 2, "odd"), (4, 0, 3, "odd"), (1, -1, 3, "odd"), (1, 0, 3, "both")])
def test_m_il_dim_rejects(i, l, n, parity):
    with pytest.raises(UnsupportedError):
        m_il_dim(i, l, n, parity)


def test_bound_poly_for_k_two():
    assert bound_poly(2, "odd") == QPoly.of(3, -8, 4)
    assert bound_poly(2, "even") == QPoly.of(1, -4, 4)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("parity", ["odd", "even"])
def test_bound_poly_lead_is_catalan(k, parity):
    poly = bound_poly(k, parity)
    assert poly.degree == 2 * k - 2
    assert poly.lead == catalan_lead(k)


def test_catalan_lead():
    assert catalan_lead(3) == Fraction(10, 3)


@pytest.mark.parametrize(("k", "parity"), [(1, "odd"), (2, "mixed")])
def test_bound_poly_rejects(k, parity):
    with pytest.raises(UnsupportedError):
        bound_poly(k, parity)


def test_bound_spec_head_is_full_codimension():
    spec = bound_spec(2, "odd")
    assert spec.head_values == (1, 0, 1, 2)
    assert spec.threshold == 4
    assert spec.label == "A_2"
    assert [spec.codimension(n) for n in range(4)] == [1, 1, 2, 6]
    assert spec.value(4) == 35


def test_bound_spec_head_length():
    with pytest.raises(DimensionMismatchError):
        bound_spec(2, "even", [1, 0, 1])


def test_did_spec_for_e_tensor_e2():
    spec = did_spec(1)
    assert spec.tail == QPoly.of(0, -2, 1)
    assert spec.head_values == (1, 0, 1, 2)
    assert (spec.value(4), spec.value(5)) == (9, 15)
    assert spec.fit_start == 1


def test_did_spec_detects_non_polynomial_tail():
    with pytest.raises(VerificationError):
        did_spec(1, lambda n: n**3)


def test_did_spec_rejects_l_zero():
    with pytest.raises(UnsupportedError):
        did_spec(0)


def test_did_closed_form():
    form = closed_form(did_spec(1))
    assert form.r == QPoly.of(Fraction(1, 2), Fraction(-3, 4), Fraction(1, 4))
    assert form.s == QPoly.of(0, Fraction(2, 3), Fraction(1, 2), Fraction(-1, 6))
    assert form(4) == 24


@pytest.mark.parametrize("k", [2, 3])
def test_bound_closed_form_lead(k):
    form = closed_form(bound_spec(k, "odd"))
    assert form.r.degree == 2 * k - 2
    assert form.r.lead == Fraction(catalan(k), factorial(2 * k - 2))


def test_constant_sequence_closed_form():
    form = closed_form(BoundSpec(0, (), QPoly.of(1)))
    assert form.r == QPoly.of(1)
    assert form.s.is_zero()


def test_codim_table_rows_agree():
    rows = codim_table(did_spec(1), 8)
    assert rows[0][0] == 1
    assert rows[-1][0] == 8
    assert all(bound == value for _, bound, value in rows)


def test_combined_bounds():
    assert combined_bounds(4) == (Fraction(58, 45), Fraction(29, 1440))
    gamma_lead, codim_lead = combined_bounds(5)
    assert codim_lead * 2**8 == gamma_lead
    with pytest.raises(UnsupportedError):
        combined_bounds(3)


@pytest.fixture
def service() -> CodimensionService:
    freealg = FreeAlgebraService()
    return CodimensionService(freealg, RepresentationService(freealg))


@pytest.mark.asyncio
async def test_service_codim(service):
    entity = await service.codim(2, n_max=6)
    assert entity.label == "A_2"
    assert entity.threshold == 4
    assert [row.n for row in entity.rows] == list(range(7))
    assert all(row.lower_bound == row.closed_form for row in entity.rows)


@pytest.mark.asyncio
async def test_service_did_codim(service):
    entity = await service.did_codim(1, n_max=6)
    assert entity.tail == "n**2 - 2*n"
    assert entity.closed_form.r == ["1/2", "-3/4", "1/4"]
    assert entity.rows[0].n == 1


@pytest.mark.asyncio
async def test_service_bounds(service):
    small = await service.bounds(3)
    assert (small.catalan, small.a_lead, small.b_lead, small.r_lead) == (5, "10/3", "10/3", "5/24")
    assert small.gamma_lead is None
    large = await service.bounds(4)
    assert (large.gamma_lead, large.codim_lead) == ("58/45", "29/1440")
