from .entity import InclusionReport, ModuleSpanEntity, QuotientDimsEntity
from .parser import parse_poly
from .poly import (
    MultilinearPoly,
    NcPoly,
    Word,
    commutator,
    commutator_of_variables,
    long_commutator,
    make_g,
    multilinearize,
    permutation_sign,
    sn_act,
    standard_commutator_form,
    standard_poly,
    substitute_unit,
    word_index,
    words_of_degree,
    x,
)
from .service import FreeAlgebraService
from .spans import (
    check_lemma_instances,
    check_product_inclusion,
    derangements,
    ideal_basis,
    ideal_multilinear_span,
    module_span_dim,
    product_span,
    proper_dimension,
    proper_span,
    quotient_character,
    quotient_dims,
)

__all__ = [
    "FreeAlgebraService",
    "InclusionReport",
    "ModuleSpanEntity",
    "MultilinearPoly",
    "NcPoly",
    "QuotientDimsEntity",
    "Word",
    "check_lemma_instances",
    "check_product_inclusion",
    "commutator",
    "commutator_of_variables",
    "derangements",
    "ideal_basis",
    "ideal_multilinear_span",
    "long_commutator",
    "make_g",
    "module_span_dim",
    "multilinearize",
    "parse_poly",
    "permutation_sign",
    "product_span",
    "proper_dimension",
    "proper_span",
    "quotient_character",
    "quotient_dims",
    "sn_act",
    "standard_commutator_form",
    "standard_poly",
    "substitute_unit",
    "word_index",
    "words_of_degree",
    "x",
]
