from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from service.core.errors import DimensionMismatchError, PolyParseError, UnsupportedError
from service.freealg import (
    MultilinearPoly,
    NcPoly,
    commutator,
    commutator_of_variables,
    long_commutator,
    make_g,
    multilinearize,
    parse_poly,
    permutation_sign,
    sn_act,
    standard_commutator_form,
    standard_poly,
    substitute_unit,
    x,
)

pytestmark = pytest.mark.unit


def test_commutator_expansion():
    assert commutator(x(1), x(2)) == NcPoly({(1, 2): 1, (2, 1): -1})


def test_long_commutator_is_left_normed():
    assert long_commutator([x(1), x(2), x(3)]) == commutator(commutator(x(1), x(2)), x(3))
    assert commutator_of_variables(1, 2, 3) == long_commutator([x(1), x(2), x(3)])


def test_power_and_scalars():
    f = (x(1) + 1) ** 2
    assert f == x(1) * x(1) + 2 * x(1) + 1
    assert (f / 2).terms[()] == Fraction(1, 2)


def test_negative_power_rejected():
    with pytest.raises(UnsupportedError):
        x(1) ** -1


def test_string_rendering():
    assert str(commutator(x(1), x(2))) == "x1*x2 - x2*x1"
    assert str(NcPoly()) == "0"


def test_multihomogeneous_components():
    f = x(1) * x(1) + x(1) * x(2) - x(2) * x(1)
    components = f.multihomogeneous_components()
    assert len(components) == 2
    assert sum(components, NcPoly()) == f


def test_multilinearize_splits_repeated_variable():
    f = multilinearize(long_commutator([x(2), x(1), x(1)]))
    expected = long_commutator([x(2), x(1), x(3)]) + long_commutator([x(2), x(3), x(1)])
    assert f.degree == 3
    assert f.poly == expected


def test_multilinearize_square_of_commutator():
    f = multilinearize(commutator(x(1), x(2)) ** 2)
    c = commutator
    expected = c(x(1), x(2)) * c(x(3), x(4)) + c(x(3), x(2)) * c(x(1), x(4)) + c(x(1), x(4)) * c(x(3), x(2)) + c(x(3), x(4)) * c(x(1), x(2))
    assert f.poly == expected


def test_multilinearize_keeps_multilinear_input():
    f = commutator_of_variables(1, 2, 3)
    assert multilinearize(f).poly == f


def test_multilinearize_rejects_mixed_degrees():
    with pytest.raises(UnsupportedError):
        multilinearize(x(1) + x(1) * x(2))


def test_sn_act_renames():
    f = MultilinearPoly.of(commutator(x(1), x(2)))
    assert sn_act((2, 1), f).poly == -f.poly
    assert sn_act((1, 2), f) == f


def test_sn_act_checks_permutation():
    with pytest.raises(DimensionMismatchError):
        sn_act((1, 1), MultilinearPoly.of(commutator(x(1), x(2))))


def test_standard_poly_is_alternating():
    s3 = MultilinearPoly.of(standard_poly(3))
    assert sn_act((2, 1, 3), s3).poly == -s3.poly
    assert sn_act((2, 3, 1), s3).poly == s3.poly


def test_standard_poly_on_variables():
    assert standard_poly(2, [3, 5]) == commutator(x(3), x(5))
    with pytest.raises(DimensionMismatchError):
        standard_poly(2, [1])


@pytest.mark.parametrize("m", [2, 4])
def test_standard_poly_commutator_form(m):
    assert standard_commutator_form(m) == standard_poly(m)


def test_standard_commutator_form_needs_even_degree():
    with pytest.raises(UnsupportedError):
        standard_commutator_form(3)


def test_substitute_unit():
    assert substitute_unit(commutator(x(1), x(2)), 1).is_zero()
    assert substitute_unit(x(1) * x(2), 2) == x(1)


def test_multilinear_poly_rejects_repeated_letters():
    with pytest.raises(DimensionMismatchError):
        MultilinearPoly(x(1) * x(1), 2)
    with pytest.raises(UnsupportedError):
        MultilinearPoly.of(x(1) * x(1))


def test_vector_round_trip():
    f = MultilinearPoly.of(commutator_of_variables(1, 2, 3))
    assert MultilinearPoly.from_vector(f.vector(), 3) == f


@pytest.mark.parametrize(("i", "degree"), [(1, 5), (2, 5), (3, 5), (1, 4), (2, 4)])
def test_make_g_degrees(i, degree):
    g = make_g(i, degree)
    assert not g.is_zero()
    assert {len(w) for w in g.terms} == {degree}


@pytest.mark.parametrize(("i", "degree"), [(4, 5), (1, 3), (3, 4)])
def test_make_g_undefined(i, degree):
    with pytest.raises(UnsupportedError):
        make_g(i, degree)


def test_make_g_even_two_is_commutator_times_standard():
    assert make_g(2, 4) == commutator(x(1), x(2)) * standard_poly(2)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("[x1,x2]", commutator(x(1), x(2))),
        ("[x1,x2,x3]", commutator_of_variables(1, 2, 3)),
        ("x1 x2 - x2*x1", commutator(x(1), x(2))),
        ("[x1,x2]^2", commutator(x(1), x(2)) ** 2),
        ("1/2*x1 + 1/2 x1", x(1)),
        ("-(x1 + x2)", -x(1) - x(2)),
        ("[x1 + x2, x3]", commutator(x(1) + x(2), x(3))),
        ("3", NcPoly.const(3)),
    ],
)
def test_parse_poly(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize("text", ["", "[x1]", "x", "x1 +", "(x1", "x1 ? x2", "x0", "x100", "x1^", "1/0"])
def test_parse_poly_rejects(text):
    with pytest.raises(PolyParseError):
        parse_poly(text)


permutations_of_four = st.permutations([1, 2, 3, 4])


@given(permutations_of_four, permutations_of_four)
def test_sn_act_is_an_action(sigma, tau):
    f = MultilinearPoly.of(commutator_of_variables(1, 2) * commutator_of_variables(3, 4) + commutator_of_variables(4, 1, 2, 3))
    composed = tuple(sigma[tau[i] - 1] for i in range(4))
    assert sn_act(composed, f) == sn_act(sigma, sn_act(tau, f))


@given(permutations_of_four)
def test_standard_poly_sign(sigma):
    s4 = MultilinearPoly.of(standard_poly(4))
    assert sn_act(sigma, s4).poly == permutation_sign(sigma) * s4.poly
