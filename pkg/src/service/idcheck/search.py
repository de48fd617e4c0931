"""Minimal Lie nilpotency index search and the known upper bounds used as default caps."""
import logging
from itertools import combinations

from service.algebras import AlgebraSpec, SlotSpec, materialize
from service.core.errors import CapExceededError, UnsupportedError
from service.freealg import MultilinearPoly, commutator_of_variables

from .brute import brute_check
from .parity import parity_check
from .verdict import IdentityVerdict

logger = logging.getLogger("service.idcheck.search")


def _is_small(slot: SlotSpec) -> bool:
    """Satisfies [x1,x2,x3] and [x1,x2][x3,x4]: E_2, E_3 and N_3."""
    return (slot.kind == "E" and slot.size in (2, 3)) or (slot.kind == "N" and slot.size == 3)


def _single_index(slot: SlotSpec) -> int | None:
    if slot.kind == "E":
        return 3
    if slot.kind == "N":
        return slot.size
    return None


def _pair_index(a: SlotSpec, b: SlotSpec) -> int | None:
    if not (a.is_grassmann and b.is_grassmann):
        return None
    if a.is_unbounded and b.is_unbounded:
        return None
    if a.is_unbounded or b.is_unbounded:
        r = b.size if a.is_unbounded else a.size
        return 2 * (r // 2) + 3  # type: ignore[operator]
    low, high = sorted((a.size // 2, b.size // 2))  # type: ignore[operator]
    # E_r embeds in E, so the pair also sits inside E ⊗ E_{r'}
    return min(2 * high + 2, 2 * low + 3)


def _add_small_factors(index: int, count: int) -> int:
    for _ in range(count):
        index += 1 if index % 2 == 0 else 2
    return index


def recognized_cap(spec: AlgebraSpec) -> int | None:
    """
    The smallest known q such that the algebra satisfies [x_1, ..., x_q].

    A base of one slot (E or E_r: 3, N_k: k) or of a Grassmann pair (E ⊗ E_r with
    r ∈ {2k, 2k+1}: 2k+3; E_r ⊗ E_r' with r, r' ∈ {2k, 2k+1}: 2k+2; other bounded pairs take
    the smaller bound of the pairs containing them) is extended by the remaining slots if
    all of them are E_2, E_3 or N_3, each raising an even index by one and an odd index by two.
    Products of l copies of E_2 are also bounded by l + 2.

    Returns:
        int | None: The bound, or None if the spec is not covered.
    """
    slots = spec.slots
    candidates: list[int] = []
    if all(slot.kind == "E" and slot.size == 2 for slot in slots):
        candidates.append(len(slots) + 2)
    for i, slot in enumerate(slots):
        rest = slots[:i] + slots[i + 1:]
        if (base := _single_index(slot)) is not None and all(_is_small(other) for other in rest):
            candidates.append(_add_small_factors(base, len(rest)))
    for i, j in combinations(range(len(slots)), 2):
        rest = [slot for position, slot in enumerate(slots) if position not in (i, j)]
        if (base := _pair_index(slots[i], slots[j])) is not None and all(_is_small(other) for other in rest):
            candidates.append(_add_small_factors(base, len(rest)))
    return min(candidates) if candidates else None


def check_long_commutator(spec: AlgebraSpec, q: int, *, max_dim: int | None = None) -> IdentityVerdict:
    """Whether [x_1, ..., x_q] is an identity: parity patterns for Grassmann slots, evaluation otherwise."""
    f = MultilinearPoly(commutator_of_variables(*range(1, q + 1)), q)
    if spec.all_grassmann:
        return parity_check(f, spec)
    algebra = materialize(spec, max_dim=max_dim, unbounded_rank=max(q, 2))
    return brute_check(f, algebra)


def min_index(spec: AlgebraSpec, cap: int | None = None, *, max_dim: int | None = None) -> int:
    """
    The least q ≤ cap such that the algebra satisfies [x_1, ..., x_q] = 0.

    Args:
        spec (AlgebraSpec): The algebra.
        cap (int | None): Largest q tried, defaults to ``recognized_cap(spec)``.
        max_dim (int | None): Dimension cap for materialized algebras.

    Returns:
        int: The minimal index.

    Raises:
        UnsupportedError: If no cap is given and none is known, or cap < 3.
        CapExceededError: If no q ≤ cap works. This is never a proof of non-nilpotency.
    """
    if cap is None:
        cap = recognized_cap(spec)
        if cap is None:
            raise UnsupportedError(f"no known upper bound for {spec}, pass a cap explicitly")
    if cap < 3:
        raise UnsupportedError(f"the cap must be at least 3, got {cap}")
    for q in range(2, cap + 1):
        if check_long_commutator(spec, q, max_dim=max_dim).is_identity:
            logger.info(f"Minimal Lie nilpotency index of {spec} is {q}")
            return q
        logger.debug(f"{spec} does not satisfy [x1, ..., x{q}]")
    raise CapExceededError(f"{spec} satisfies no [x1, ..., xq] with q <= {cap}")
