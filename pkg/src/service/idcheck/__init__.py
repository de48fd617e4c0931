from .brute import basis_tuples, brute_check, is_long_commutator
from .entity import EvaluationEntity, GammaEntity, IdentityVerdictEntity, MinIndexEntity, WitnessEntity
from .gamma import identity_gamma, proper_basis
from .parity import materialize_pattern, nonzero_patterns, parity_check, pattern_sum, sign_table, slot_masks
from .recipes import RECIPES, RecipeInstance, g_family, grassmann_chain, lie_equal, product_nonidentity_witness, run_recipe, square_commutator
from .search import check_long_commutator, min_index, recognized_cap
from .service import IdentityService
from .verdict import IdentityVerdict, ParityPattern, Witness

__all__ = [
    "RECIPES",
    "EvaluationEntity",
    "GammaEntity",
    "IdentityService",
    "IdentityVerdict",
    "IdentityVerdictEntity",
    "MinIndexEntity",
    "ParityPattern",
    "RecipeInstance",
    "Witness",
    "WitnessEntity",
    "basis_tuples",
    "brute_check",
    "check_long_commutator",
    "g_family",
    "grassmann_chain",
    "identity_gamma",
    "is_long_commutator",
    "lie_equal",
    "materialize_pattern",
    "min_index",
    "nonzero_patterns",
    "parity_check",
    "pattern_sum",
    "product_nonidentity_witness",
    "proper_basis",
    "recognized_cap",
    "run_recipe",
    "sign_table",
    "slot_masks",
    "square_commutator",
]
