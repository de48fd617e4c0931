import json
from fractions import Fraction

import pytest

from service.algebras import (
    AlgebraSpec,
    FiniteAlgebra,
    SlotSpec,
    evaluate,
    load_structure_file,
    make_grassmann,
    make_nk,
    materialize,
    parse_algebra_spec,
    slot_dimension,
    tensor,
)
from service.core.errors import ConstructionError, DimensionMismatchError, SizeGuardError, SpecParseError, UnsupportedError
from service.freealg import parse_poly

pytestmark = pytest.mark.unit


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("E2*E2", "E2*E2"),
        (" E * E3 ", "E*E3"),
        ("N4*N3", "N4*N3"),
        ("E*E2*E2", "E*E2*E2"),
    ],
)
def test_parse_round_trips_to_canonical_text(text, expected):
    assert str(parse_algebra_spec(text)) == expected


def test_parse_reads_slots():
    spec = parse_algebra_spec("E*E3*N4")
    assert spec.slots == (SlotSpec("E"), SlotSpec("E", 3), SlotSpec("N", 4))
    assert spec.has_unbounded
    assert not spec.all_grassmann


def test_parse_structure_file_slot(tmp_path):
    spec = parse_algebra_spec(f"@{tmp_path / 'a.json'}*E2")
    assert spec.slots[0].kind == "file"


@pytest.mark.parametrize("text", ["", "F2", "E1", "N2", "N", "E2**E2", "E65"])
def test_parse_rejects(text):
    with pytest.raises(SpecParseError):
        parse_algebra_spec(text)


def test_grassmann_dims():
    assert parse_algebra_spec("E*E4").grassmann_dims == (None, 4)


def test_grassmann_basis_and_unit():
    e2 = make_grassmann(2)
    assert e2.dim == 4
    assert e2.basis_labels == ["1", "e1", "e2", "e1e2"]
    e1, e2_ = e2.basis(1), e2.basis(2)
    assert e2.mul(e1, e2_) == e2.basis(3)
    assert e2.mul(e2_, e1) == e2.scale(e2.basis(3), -1)
    assert e2.mul(e1, e1).is_zero()


def test_make_grassmann_range():
    with pytest.raises(UnsupportedError):
        make_grassmann(1)


def test_nk_basis():
    n4 = make_nk(4)
    assert n4.basis_labels == ["I", "J", "J^2", "e12", "e13", "e14"]
    assert n4.dim == slot_dimension(SlotSpec("N", 4))


def test_nk_products():
    n3 = make_nk(3)
    j, e12, e13 = n3.basis(1), n3.basis(2), n3.basis(3)
    assert n3.mul(j, j) == e13
    assert n3.mul(e12, j) == e13
    assert n3.mul(j, e12).is_zero()


def test_nk_needs_three():
    with pytest.raises(UnsupportedError):
        make_nk(2)


def test_nk_satisfies_its_identities():
    n3 = make_nk(3)
    for literal in ("[x1,x2,x3]", "[x1,x2]*[x3,x4]"):
        f = parse_poly(literal)
        for i in range(n3.dim):
            for j in range(n3.dim):
                for k in range(n3.dim):
                    args = [n3.basis(i), n3.basis(j), n3.basis(k), n3.basis((i + j) % n3.dim)]
                    assert evaluate(f, args[: len(f.variables())], n3).is_zero()


def test_tensor_unit_and_dimension():
    algebra = tensor([make_grassmann(2), make_nk(3)])
    assert algebra.dim == 16
    assert algebra.mul(algebra.one(), algebra.basis(7)) == algebra.basis(7)
    assert algebra.label(algebra.unit_index) == "1 ⊗ I"


def test_tensor_supports_only_grassmann_slots():
    algebra = tensor([make_grassmann(2), make_nk(3)])
    assert algebra.is_grassmann_built
    assert algebra.grassmann_supports(5) == (1, None)


def test_tensor_validates():
    tensor([make_grassmann(2), make_grassmann(2)], validate=True)


def test_tensor_size_guard():
    with pytest.raises(SizeGuardError):
        tensor([make_grassmann(4), make_grassmann(4)], max_dim=100)


def test_materialize_needs_rank_for_e():
    with pytest.raises(UnsupportedError):
        materialize(parse_algebra_spec("E*E2"))
    assert materialize(parse_algebra_spec("E*E2"), unbounded_rank=3).dim == 32


def test_materialize_guard():
    with pytest.raises(SizeGuardError):
        materialize(parse_algebra_spec("E4*E4*E4"), max_dim=1000)


def test_elements_of_other_algebras_rejected():
    a, b = make_grassmann(2), make_grassmann(3)
    with pytest.raises(DimensionMismatchError):
        a.mul(a.one(), b.one())


def test_render():
    e2 = make_grassmann(2)
    element = e2.add(e2.one(), e2.scale(e2.basis(3), Fraction(-1, 2)))
    assert str(element) == "1 - 1/2·e1e2"
    assert str(e2.zero()) == "0"


def test_validate_detects_non_associativity():
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1}, (1, 1): {2: 1}, (1, 2): {1: 1}}
    algebra = FiniteAlgebra.from_table("broken", ["1", "a", "b"], 0, table)
    with pytest.raises(ConstructionError):
        algebra.validate()


def test_from_table_checks_unit():
    with pytest.raises(ConstructionError):
        FiniteAlgebra.from_table("bad", ["1"], 3, {})


def test_load_structure_file(tmp_path):
    path = tmp_path / "dual.json"
    path.write_text(json.dumps({"basis": ["1", "t"], "unit": 0, "table": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 0, [[1, "1/1"]]]]}))
    algebra = load_structure_file(path)
    assert algebra.dim == 2
    assert algebra.mul(algebra.basis(1), algebra.basis(1)).is_zero()


def test_load_structure_file_rejects_bad_index(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"basis": ["1"], "unit": 0, "table": [[0, 0, [[5, 1]]]]}))
    with pytest.raises(ConstructionError):
        load_structure_file(path)


def test_load_structure_file_missing(tmp_path):
    with pytest.raises(ConstructionError):
        load_structure_file(tmp_path / "missing.json")


def test_evaluate_checks_arity():
    e2 = make_grassmann(2)
    with pytest.raises(DimensionMismatchError):
        evaluate(parse_poly("[x1,x2]"), [e2.basis(1)], e2)


def test_evaluate_commutator():
    e2 = make_grassmann(2)
    value = evaluate(parse_poly("[x1,x2]"), [e2.basis(1), e2.basis(2)], e2)
    assert value == e2.scale(e2.basis(3), 2)


def test_spec_dataclass_is_hashable():
    assert len({AlgebraSpec((SlotSpec("E", 2),)), parse_algebra_spec("E2")}) == 1
