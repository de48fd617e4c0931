from .evaluate import AlgebraLike, evaluate
from .spec import AlgebraSpec, SlotSpec, StructureFile, load_structure_file, materialize, parse_algebra_spec, slot_dimension
from .structure import AlgebraElem, FiniteAlgebra, grassmann_basis, make_grassmann, make_nk, tensor

__all__ = [
    "AlgebraElem",
    "AlgebraLike",
    "AlgebraSpec",
    "FiniteAlgebra",
    "SlotSpec",
    "StructureFile",
    "evaluate",
    "grassmann_basis",
    "load_structure_file",
    "make_grassmann",
    "make_nk",
    "materialize",
    "parse_algebra_spec",
    "slot_dimension",
    "tensor",
]
