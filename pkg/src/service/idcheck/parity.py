"""
Identity checking on tensor products of Grassmann algebras by parity patterns.

Why patterns suffice: a multilinear f is an identity iff it vanishes on all tuples of
pure tensors of basis monomials. In one slot, a product of monomials with overlapping
supports is zero, so only disjoint supports matter; then every even monomial is central
and every odd monomial behaves like a single generator, and the product equals
``(-1)^{inversions among the odd entries} * (union monomial)``. The value of f on such a
tuple is therefore ``S(P) * (fixed pure tensor)`` where P records which variables are Odd
in which slot, and S(P) depends on nothing else. Replacing each Odd entry by one fresh
generator and each even entry by 1 keeps S(P) and needs the fewest generators, so P is
realizable iff each slot has at most ``r_j`` Odd entries.
"""
import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import cache
from math import lcm
from typing import TypeAlias

import numpy as np

from service.algebras import AlgebraSpec, evaluate
from service.core.errors import UnsupportedError, VerificationError
from service.freealg import MultilinearPoly, NcPoly
from service.grassmann import GrassmannTensor, TensorElem, monomial

from .verdict import IdentityVerdict, ParityPattern, Witness

logger = logging.getLogger("service.idcheck.parity")

Capacities: TypeAlias = tuple[int | None, ...]
INT64_SAFE = 1 << 62


def as_multilinear(f: NcPoly | MultilinearPoly) -> MultilinearPoly:
    if isinstance(f, MultilinearPoly):
        return f
    if f.multilinear_degree() is None:
        raise UnsupportedError(f"{f} is not multilinear")
    return MultilinearPoly.of(f)


def capacities_of(spec: AlgebraSpec | Sequence[int | None]) -> Capacities:
    if isinstance(spec, AlgebraSpec):
        if not spec.all_grassmann:
            raise UnsupportedError(f"parity checking needs Grassmann slots only, got {spec}")
        return spec.grassmann_dims
    return tuple(spec)


@cache
def slot_masks(n: int, capacity: int | None) -> tuple[int, ...]:
    """Odd-sets of one slot in ascending integer order, at most ``capacity`` bits."""
    return tuple(mask for mask in range(1 << n) if capacity is None or mask.bit_count() <= capacity)


def _integer_coefficients(f: MultilinearPoly) -> tuple[list[tuple[int, ...]], list[int], int]:
    words = sorted(f.poly.terms)
    scale = lcm(*(f.poly.terms[w].denominator for w in words)) if words else 1
    return words, [int(f.poly.terms[w] * scale) for w in words], scale


def sign_table(words: Sequence[tuple[int, ...]], n: int, masks: Sequence[int], dtype: type | str = np.int64) -> np.ndarray:
    """
    ``T[w, k] = (-1)^(number of pairs a < b, both in masks[k], that word w places b before a)``.
    """
    positions = np.zeros((len(words), n), dtype=np.int64)
    for row, word in enumerate(words):
        positions[row, np.asarray(word, dtype=np.int64) - 1] = np.arange(n)
    inverted = (positions[:, None, :] < positions[:, :, None]).astype(np.int64)
    inverted = np.triu(inverted, k=1)
    bits = ((np.asarray(masks, dtype=np.int64)[:, None] >> np.arange(n)) & 1).astype(np.int64)
    counts = np.einsum("wab,ka,kb->wk", inverted, bits, bits)
    return (1 - 2 * (counts & 1)).astype(dtype)


def pattern_sum(f: NcPoly | MultilinearPoly, pattern: ParityPattern) -> Fraction:
    """S(P) = Σ_w c_w Π_j (-1)^{inversions of w among the Odd variables of slot j}."""
    f = as_multilinear(f)
    if pattern.degree != f.degree:
        raise UnsupportedError(f"pattern of degree {pattern.degree} for a polynomial of degree {f.degree}")
    total = Fraction(0)
    for word, c in f.poly.terms.items():
        sign = 1
        for mask in pattern.masks:
            odd = [letter for letter in word if mask >> (letter - 1) & 1]
            inversions = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
            sign *= -1 if inversions & 1 else 1
        total += sign * c
    return total


def materialize_pattern(pattern: ParityPattern, capacities: Capacities) -> tuple[GrassmannTensor, list[TensorElem]]:
    """Odd entries become consecutive generators per slot in variable order, EvenUnit entries become 1."""
    algebra = GrassmannTensor(capacities)
    args = []
    counters = [0] * len(capacities)
    for variable in range(1, pattern.degree + 1):
        factors = []
        for slot, dim in enumerate(capacities):
            if pattern.is_odd(variable, slot):
                counters[slot] += 1
                factors.append(monomial([counters[slot]], dim))
            else:
                factors.append(monomial([], dim))
        args.append(algebra.pure(*factors))
    return algebra, args


def expected_value(algebra: GrassmannTensor, pattern: ParityPattern, capacities: Capacities, s: Fraction) -> TensorElem:
    factors = [monomial(range(1, pattern.odd_count(slot) + 1), dim) for slot, dim in enumerate(capacities)]
    return algebra.scale(algebra.pure(*factors), s)


def _group_predecessors(capacities: Capacities) -> list[int | None]:
    """Previous slot of equal capacity; patterns are only visited with non-decreasing masks inside such groups."""
    last: dict[int | None, int] = {}
    predecessors: list[int | None] = []
    for slot, capacity in enumerate(capacities):
        predecessors.append(last.get(capacity))
        last[capacity] = slot
    return predecessors


def parity_check(f: NcPoly | MultilinearPoly, spec: AlgebraSpec | Sequence[int | None]) -> IdentityVerdict:
    """
    Decides whether a multilinear polynomial is an identity of E_{r_1} ⊗ ... ⊗ E_{r_s}.

    Patterns are visited in lexicographic order of their slot masks. Slots of equal
    capacity are interchangeable, so only patterns with non-decreasing masks inside each
    group are visited; the lexicographically first nonzero pattern always has that form,
    which keeps the returned witness the canonical one.

    Args:
        f (NcPoly | MultilinearPoly): Multilinear polynomial of degree n.
        spec (AlgebraSpec | Sequence[int | None]): The algebra, or slot capacities with None for E.

    Returns:
        IdentityVerdict: Identity, or the first violating pattern materialized and evaluated.

    Raises:
        UnsupportedError: For non-multilinear input or non-Grassmann slots.
        VerificationError: If the materialized witness does not evaluate to the predicted value.
    """
    f = as_multilinear(f)
    capacities = capacities_of(spec)
    if not capacities:
        raise UnsupportedError("an algebra needs at least one slot")
    n = f.degree
    words, coefficients, scale = _integer_coefficients(f)
    if not words:
        return IdentityVerdict(True, method="parity")
    dtype: type | str = np.int64 if sum(abs(c) for c in coefficients) < INT64_SAFE else object
    allowed = [slot_masks(n, capacity) for capacity in capacities]
    tables = [sign_table(words, n, masks, dtype) for masks in allowed]
    predecessors = _group_predecessors(capacities)
    chosen = [0] * len(capacities)
    visited = 0

    def search(slot: int, vector: np.ndarray) -> int | None:
        nonlocal visited
        previous = predecessors[slot]
        start = chosen[previous] if previous is not None else 0
        if slot == len(capacities) - 1:
            sums = vector @ tables[slot][:, start:]
            visited += sums.shape[0]
            nonzero = np.flatnonzero(sums)
            if nonzero.size:
                chosen[slot] = start + int(nonzero[0])
                return int(sums[nonzero[0]])
            return None
        for index in range(start, len(allowed[slot])):
            chosen[slot] = index
            found = search(slot + 1, vector * tables[slot][:, index])
            if found is not None:
                return found
        return None

    found = search(0, np.asarray(coefficients, dtype=dtype))
    logger.debug(f"Visited {visited} parity patterns of degree {n} on {capacities}")
    if found is None:
        return IdentityVerdict(True, method="parity")
    pattern = ParityPattern(n, tuple(masks[index] for masks, index in zip(allowed, chosen, strict=True)))
    s = Fraction(found, scale)
    algebra, args = materialize_pattern(pattern, capacities)
    value = evaluate(f, args, algebra)
    if value != expected_value(algebra, pattern, capacities, s):
        raise VerificationError(f"witness for pattern {pattern.masks} evaluates to {value}, expected S(P) = {s}")
    return IdentityVerdict(False, Witness(tuple(args), value, pattern=pattern), method="parity")


def nonzero_patterns(f: NcPoly | MultilinearPoly, capacities: Sequence[int | None]) -> list[tuple[ParityPattern, Fraction]]:
    """Every feasible pattern with nonzero S(P), in enumeration order (no group reduction)."""
    f = as_multilinear(f)
    caps = tuple(capacities)
    n = f.degree
    words, coefficients, scale = _integer_coefficients(f)
    allowed = [slot_masks(n, capacity) for capacity in caps]
    tables = [sign_table(words, n, masks, object) for masks in allowed]
    found: list[tuple[ParityPattern, Fraction]] = []

    def walk(slot: int, vector: np.ndarray, prefix: tuple[int, ...]) -> None:
        if slot == len(caps):
            total = int(vector.sum())
            if total:
                found.append((ParityPattern(n, prefix), Fraction(total, scale)))
            return
        for index, mask in enumerate(allowed[slot]):
            walk(slot + 1, vector * tables[slot][:, index], (*prefix, mask))

    walk(0, np.asarray(coefficients, dtype=object), ())
    return found

