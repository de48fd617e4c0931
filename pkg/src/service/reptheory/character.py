"""Irreducible characters of S_n by the Murnaghan-Nakayama rule."""
from functools import cache

from service.core.errors import DimensionMismatchError

from .partition import Partition, hook_dim


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    length = len(shape)
    return tuple(part + length - 1 - i for i, part in enumerate(shape))


def _from_beta_set(beta: set[int]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    return tuple(b - (length - 1 - i) for i, b in enumerate(ordered) if b - (length - 1 - i) > 0)


@cache
def _character(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    if all(part == 1 for part in cycles):
        return hook_dim(Partition(shape))
    r, rest = cycles[0], cycles[1:]
    beta = set(_beta_set(shape))
    total = 0
    # Removing a border strip of size r moves one bead r positions down onto a free place;
    # the strip height equals the number of beads jumped over.
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        height = sum(1 for other in beta if target < other < b)
        moved = (beta - {b}) | {target}
        value = _character(_from_beta_set(moved), rest)
        total += -value if height % 2 else value
    return total


def mn_character(shape: Partition, cycle_type: Partition) -> int:
    """
    χ_λ(μ): the value of the irreducible character λ on the class of cycle type μ.

    Raises:
        DimensionMismatchError: If |λ| ≠ |μ|.
    """
    if shape.n != cycle_type.n:
        raise DimensionMismatchError(f"{shape} and {cycle_type} partition different integers")
    return _character(shape.parts, cycle_type.parts)
