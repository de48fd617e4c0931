from .bounds import (
    BoundSpec,
    CodimRow,
    Parity,
    bound_poly,
    bound_spec,
    catalan_lead,
    closed_form,
    codim_table,
    combined_bounds,
    did_spec,
    m_il_dim,
    module_degree,
    module_partition,
)
from .entity import BoundsEntity, CodimEntity, CodimRowEntity, QuasiPolyEntity
from .sequence import N, Gamma, QPoly, QuasiPoly, binom_transform, catalan
from .service import CodimensionService

__all__ = [
    "N",
    "BoundSpec",
    "BoundsEntity",
    "CodimEntity",
    "CodimRow",
    "CodimRowEntity",
    "CodimensionService",
    "Gamma",
    "Parity",
    "QPoly",
    "QuasiPoly",
    "QuasiPolyEntity",
    "binom_transform",
    "bound_poly",
    "bound_spec",
    "catalan",
    "catalan_lead",
    "closed_form",
    "codim_table",
    "combined_bounds",
    "did_spec",
    "m_il_dim",
    "module_degree",
    "module_partition",
]
