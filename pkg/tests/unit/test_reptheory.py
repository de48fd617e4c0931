from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from service.core.errors import DimensionMismatchError, SizeGuardError, UnsupportedError, VerificationError
from service.freealg import FreeAlgebraService, quotient_dims
from service.reptheory import (
    Decomposition,
    Partition,
    RepresentationService,
    centralizer_order,
    class_representative,
    class_size,
    cycle_type,
    decompose_character,
    decompose_quotient,
    did_gamma,
    did_gamma_finite,
    e_tensor_lead,
    hook_dim,
    intro_partitions,
    mn_character,
    partitions_of,
)

pytestmark = pytest.mark.unit

P = Partition.of


def test_partition_normalizes():
    assert P(1, 3, 0, 1) == Partition((3, 1, 1))
    assert str(P(2, 2, 1)) == "(2,2,1)"
    assert Partition.hook(2, 3) == P(3, 1, 1, 1)


def test_partition_rejects_increasing_parts():
    with pytest.raises(UnsupportedError):
        Partition((1, 2))
    with pytest.raises(UnsupportedError):
        Partition((2, 0))


def test_conjugate_and_hooks():
    assert P(3, 1).conjugate() == P(2, 1, 1)
    assert P(2, 1).hooks() == [3, 1, 1]
    assert P(3, 2).hook_length(0, 0) == 4


@pytest.mark.parametrize(("shape", "dim"), [(P(3, 2), 5), (P(2, 2, 1), 5), (P(3, 1, 1), 6), (P(4), 1), (P(1, 1, 1), 1), (P(3, 2, 1), 16)])
def test_hook_dim(shape, dim):
    assert hook_dim(shape) == dim


def test_partitions_of():
    assert partitions_of(4) == (P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1))
    assert len(partitions_of(6)) == 11
    assert partitions_of(0) == (Partition(()),)


def test_classes():
    assert class_size(P(2, 1, 1)) == 6
    assert centralizer_order(P(2, 2)) == 8
    assert class_representative(P(2, 1)) == (2, 1, 3)
    assert class_representative(P(3)) == (2, 3, 1)
    assert cycle_type((2, 1, 4, 3)) == P(2, 2)
    assert P(2, 1).sign() == -1


@given(st.integers(1, 7))
def test_hook_dims_square_to_group_order(n):
    assert sum(hook_dim(shape) ** 2 for shape in partitions_of(n)) == factorial(n)


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_representative_has_its_cycle_type(mu):
    assert cycle_type(class_representative(mu)) == mu


@pytest.mark.parametrize(("shape", "mu", "value"), [(P(2, 1), P(3), -1), (P(2, 1), P(2, 1), 0), (P(2, 1), P(1, 1, 1), 2), (P(2, 2), P(2, 2), 2), (P(3, 1), P(4), -1)])
def test_mn_character(shape, mu, value):
    assert mn_character(shape, mu) == value


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def test_characters_are_orthogonal(pair):
    shape, other = pair
    n = shape.n
    inner = sum(class_size(mu) * mn_character(shape, mu) * mn_character(other, mu) for mu in partitions_of(n))
    assert inner == (factorial(n) if shape == other else 0)


@pytest.mark.parametrize("n", [3, 5])
def test_trivial_and_sign_characters(n):
    for mu in partitions_of(n):
        assert mn_character(P(n), mu) == 1
        assert mn_character(P(*[1] * n), mu) == mu.sign()


def test_character_needs_matching_sizes():
    with pytest.raises(DimensionMismatchError):
        mn_character(P(2, 1), P(2))


def test_decompose_regular_character():
    n = 4
    traces = {mu: (factorial(n) if mu == P(1, 1, 1, 1) else 0) for mu in partitions_of(n)}
    decomposition = decompose_character(n, traces)
    assert all(decomposition.multiplicity(shape) == hook_dim(shape) for shape in partitions_of(n))
    assert decomposition.dimension == factorial(n)


def test_decompose_rejects_non_characters():
    traces = {mu: (1 if mu == P(1, 1, 1) else 0) for mu in partitions_of(3)}
    with pytest.raises(VerificationError):
        decompose_character(3, traces)


def test_decomposition_rendering():
    decomposition = Decomposition.of(4, {P(2, 2): 2, P(3, 1): 1, P(4): 0})
    assert str(decomposition) == "M(3,1) + 2M(2,2)"
    assert decomposition.shapes() == [P(3, 1), P(2, 2)]
    entity = decomposition.to_entity("x")
    assert entity.dimension == 3 + 2 * 2
    assert [c.partition for c in entity.components] == ["(3,1)", "(2,2)"]
    with pytest.raises(UnsupportedError):
        Decomposition.of(3, {P(2, 2): 1})


def test_grassmann_quotient_is_sign_module():
    assert decompose_quotient(4, 2) == Decomposition.of(4, {P(1, 1, 1, 1): 1})
    assert decompose_quotient(3, 2).dimension == 0


def test_degree_four_quotients():
    assert decompose_quotient(4, 3).shapes() == [P(2, 2), P(1, 1, 1, 1)]
    full = decompose_quotient(4, 4)
    assert full.dimension == 9
    assert full.shapes() == intro_partitions(4, 4)


def test_quotient_below_the_ideal_degree_is_all_of_gamma():
    assert decompose_quotient(3, 3) == Decomposition.of(3, {P(2, 1): 1})
    assert decompose_quotient(3, 5) == Decomposition.of(3, {P(2, 1): 1})


def test_long_commutators_leave_twenty_dimensions_in_degree_five():
    # Γ_5 has dimension 44, the multilinear consequences of [x1,...,x5] span 4! = 24 of it
    decomposition = decompose_quotient(5, 4)
    assert decomposition.dimension == 44 - 24
    assert decomposition.multiplicity(P(1, 1, 1, 1, 1)) == 0


@pytest.mark.parametrize("p", [3, 4, 5])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quotient_dimension_matches_quotient_dims(n, p):
    assert decompose_quotient(n, p).dimension == quotient_dims(n, p)[1]


def test_decompose_guard():
    with pytest.raises(SizeGuardError):
        decompose_quotient(7, 3)


def test_small_degrees():
    assert decompose_quotient(0, 2).dimension == 1
    assert decompose_quotient(1, 2).dimension == 0


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_did_gamma_dimension(n):
    assert did_gamma(n, 1).dimension == n * n - 2 * n + (n % 2 == 0)


def test_did_gamma_shapes():
    assert did_gamma(4, 1).shapes() == [P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
    assert P(1, 1, 1, 1, 1) not in did_gamma(5, 2).shapes()


@pytest.mark.parametrize(("n", "dim"), [(2, 1), (3, 2), (4, 3), (5, 0), (6, 0)])
def test_did_gamma_finite(n, dim):
    assert did_gamma_finite(n, 1, 1).dimension == dim


def test_did_gamma_finite_is_contained_in_unbounded():
    for n in range(2, 9):
        finite = set(did_gamma_finite(n, 2, 1).shapes())
        assert finite <= set(did_gamma(n, 1).shapes())


@pytest.mark.parametrize(("n", "l", "m"), [(1, 1, 1), (4, 0, 1), (4, 2, 1)])
def test_did_gamma_finite_rejects(n, l, m):
    with pytest.raises(UnsupportedError):
        did_gamma_finite(n, m, l)


def test_did_gamma_rejects():
    with pytest.raises(UnsupportedError):
        did_gamma(1, 1)


def test_intro_partitions():
    assert intro_partitions(4, 3) == [P(2, 2), P(1, 1, 1, 1)]
    assert intro_partitions(4, 2) == [P(1, 1, 1, 1)]
    assert P(1, 1, 1, 1, 1) not in intro_partitions(5, 4)
    with pytest.raises(UnsupportedError):
        intro_partitions(4, 1)


def test_e_tensor_lead():
    assert e_tensor_lead(1) == 1
    assert e_tensor_lead(2) == Fraction(1, 3)
    with pytest.raises(UnsupportedError):
        e_tensor_lead(0)


@pytest.mark.asyncio
async def test_service_decompose():
    entity = await RepresentationService(FreeAlgebraService()).decompose(4, 2)
    assert [c.partition for c in entity.components] == ["(1,1,1,1)"]
    assert entity.label == "Gamma_4(N_2)"


@pytest.mark.asyncio
async def test_service_did():
    service = RepresentationService(FreeAlgebraService())
    assert (await service.did(4, 1)).dimension == 9
    assert (await service.did(4, 1, m=1)).dimension == 3


@pytest.mark.asyncio
async def test_service_intro():
    entity = await RepresentationService(FreeAlgebraService()).intro(4, 3)
    assert entity.partitions == ["(2,2)", "(1,1,1,1)"]
