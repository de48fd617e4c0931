from .algebra import (
    MAX_GENERATORS,
    GMonomial,
    GrassmannElem,
    GrassmannTensor,
    TensorElem,
    TensorMonomial,
    gcommutator,
    generator,
    gmul,
    inversions,
    monomial,
    monomial_order,
    monomial_product,
    render_monomial,
    tcommutator,
    tmul,
    unit,
)

__all__ = [
    "MAX_GENERATORS",
    "GMonomial",
    "GrassmannElem",
    "GrassmannTensor",
    "TensorElem",
    "TensorMonomial",
    "gcommutator",
    "generator",
    "gmul",
    "inversions",
    "monomial",
    "monomial_order",
    "monomial_product",
    "render_monomial",
    "tcommutator",
    "tmul",
    "unit",
]
