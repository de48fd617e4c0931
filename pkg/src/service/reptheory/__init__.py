from .character import mn_character
from .decompose import (
    Decomposition,
    class_representatives,
    decompose_character,
    decompose_quotient,
    did_gamma,
    did_gamma_finite,
    e_tensor_lead,
    intro_partitions,
)
from .entity import ComponentEntity, DecompositionEntity, PartitionListEntity
from .partition import Partition, centralizer_order, class_representative, class_size, cycle_type, hook_dim, partitions_of
from .service import RepresentationService

__all__ = [
    "ComponentEntity",
    "Decomposition",
    "DecompositionEntity",
    "Partition",
    "PartitionListEntity",
    "RepresentationService",
    "centralizer_order",
    "class_representative",
    "class_representatives",
    "class_size",
    "cycle_type",
    "decompose_character",
    "decompose_quotient",
    "did_gamma",
    "did_gamma_finite",
    "e_tensor_lead",
    "hook_dim",
    "intro_partitions",
    "mn_character",
    "partitions_of",
]
