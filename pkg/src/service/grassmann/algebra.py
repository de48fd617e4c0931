"""Grassmann algebras E_r on bit-set monomials and their ungraded tensor products.

Generator e_i is bit ``i - 1`` of a monomial. A slot dimension of ``None`` stands for the
infinitely generated algebra E; such elements still only ever carry finitely many
generators.
"""
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeAlias

from service.core.errors import DimensionMismatchError, UnsupportedError

logger = logging.getLogger("service.grassmann.algebra")

MAX_GENERATORS = 64

GMonomial: TypeAlias = int
SlotDim: TypeAlias = int | None


def inversions(s: GMonomial, t: GMonomial) -> int:
    """Number of pairs (a, b) in S x T with a > b."""
    count = 0
    while t:
        low = t & -t
        count += (s & ~((low << 1) - 1)).bit_count()
        t ^= low
    return count


def monomial_product(s: GMonomial, t: GMonomial) -> tuple[int, GMonomial]:
    """
    Multiplies two Grassmann monomials.

    Returns:
        tuple[int, GMonomial]: ``(sign, union)``; sign is 0 when the supports overlap.
    """
    if s & t:
        return 0, 0
    return (-1 if inversions(s, t) & 1 else 1), s | t


def monomial_order(s: GMonomial) -> tuple[int, int]:
    """Canonical ordering key: cardinality first, then the numeric value of the bit set."""
    return s.bit_count(), s


def generators_of(s: GMonomial) -> list[int]:
    return [index + 1 for index in range(s.bit_length()) if s >> index & 1]


def render_monomial(s: GMonomial, letter: str = "e") -> str:
    if not s:
        return "1"
    return "".join(f"{letter}{index}" for index in generators_of(s))


def _check_dim(dim: SlotDim) -> None:
    if dim is not None and not 0 <= dim <= MAX_GENERATORS:
        raise UnsupportedError(f"Grassmann algebras are limited to {MAX_GENERATORS} generators, got {dim}")


def _check_fits(dim: SlotDim, monomial: GMonomial) -> None:
    if monomial.bit_length() > (MAX_GENERATORS if dim is None else dim):
        raise DimensionMismatchError(f"monomial {render_monomial(monomial)} does not fit into {dim} generators")


def _render_coefficient(coefficient: Fraction, body: str, *, first: bool) -> str:
    sign = "-" if coefficient < 0 else ("" if first else "+")
    magnitude = abs(coefficient)
    if body == "1":
        text = str(magnitude)
    elif magnitude == 1:
        text = body
    else:
        text = f"{magnitude}*{body}" if " " not in body else f"{magnitude}*({body})"
    return f"{sign}{text}" if first else f" {sign} {text}"


@dataclass(frozen=True)
class GrassmannElem:
    dim: SlotDim
    terms: Mapping[GMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_dim(self.dim)
        cleaned = {monomial: Fraction(c) for monomial, c in self.terms.items() if c}
        for monomial in cleaned:
            _check_fits(self.dim, monomial)
        object.__setattr__(self, "terms", cleaned)

    def __add__(self, other: "GrassmannElem") -> "GrassmannElem":
        _same_dim(self.dim, other.dim)
        terms = dict(self.terms)
        for monomial, c in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + c
        return GrassmannElem(self.dim, terms)

    def __neg__(self) -> "GrassmannElem":
        return GrassmannElem(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "GrassmannElem") -> "GrassmannElem":
        return self + (-other)

    def __rmul__(self, scalar: Fraction | int) -> "GrassmannElem":
        return GrassmannElem(self.dim, {m: c * scalar for m, c in self.terms.items()})

    def __mul__(self, other: "GrassmannElem") -> "GrassmannElem":
        return gmul(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [
            _render_coefficient(self.terms[m], render_monomial(m), first=i == 0)
            for i, m in enumerate(sorted(self.terms, key=monomial_order))
        ]
        return "".join(parts)


def _same_dim(a: SlotDim, b: SlotDim) -> None:
    if a != b:
        raise DimensionMismatchError(f"Grassmann dimensions differ: {a} vs {b}")


def unit(dim: SlotDim) -> GrassmannElem:
    return GrassmannElem(dim, {0: Fraction(1)})


def generator(index: int, dim: SlotDim) -> GrassmannElem:
    """The generator e_index (1-based) of E_dim."""
    if index < 1:
        raise UnsupportedError(f"generator indices start at 1, got {index}")
    return GrassmannElem(dim, {1 << (index - 1): Fraction(1)})


def monomial(generators: Iterable[int], dim: SlotDim) -> GrassmannElem:
    """The product e_{i1}...e_{ik} taken in the given order."""
    result = unit(dim)
    for index in generators:
        result = gmul(result, generator(index, dim))
    return result


def gmul(a: GrassmannElem, b: GrassmannElem) -> GrassmannElem:
    """
    Product in E_r.

    Raises:
        DimensionMismatchError: If the operands belong to different Grassmann algebras.
    """
    _same_dim(a.dim, b.dim)
    terms: dict[GMonomial, Fraction] = {}
    for s, x in a.terms.items():
        for t, y in b.terms.items():
            sign, union = monomial_product(s, t)
            if sign:
                terms[union] = terms.get(union, 0) + sign * x * y
    return GrassmannElem(a.dim, terms)


def gcommutator(a: GrassmannElem, b: GrassmannElem) -> GrassmannElem:
    return gmul(a, b) - gmul(b, a)


TensorMonomial: TypeAlias = tuple[GMonomial, ...]


@dataclass(frozen=True)
class TensorElem:
    """Element of E_{r_1} ⊗ ... ⊗ E_{r_s} as a sparse map from tuples of monomials."""

    dims: tuple[SlotDim, ...]
    terms: Mapping[TensorMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for dim in self.dims:
            _check_dim(dim)
        cleaned = {}
        for key, c in self.terms.items():
            if not c:
                continue
            if len(key) != len(self.dims):
                raise DimensionMismatchError(f"tensor monomial {key} does not have {len(self.dims)} slots")
            for dim, m in zip(self.dims, key, strict=True):
                _check_fits(dim, m)
            cleaned[key] = Fraction(c)
        object.__setattr__(self, "terms", cleaned)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda key: tuple(monomial_order(m) for m in key))
        return "".join(
            _render_coefficient(self.terms[key], " ⊗ ".join(render_monomial(m) for m in key), first=i == 0)
            for i, key in enumerate(ordered)
        )


def tmul(a: TensorElem, b: TensorElem) -> TensorElem:
    """Ungraded tensor product: slots multiply independently, no sign between slots."""
    if a.dims != b.dims:
        raise DimensionMismatchError(f"tensor slots differ: {a.dims} vs {b.dims}")
    terms: dict[TensorMonomial, Fraction] = {}
    for left, x in a.terms.items():
        for right, y in b.terms.items():
            sign = 1
            product = []
            for s, t in zip(left, right, strict=True):
                slot_sign, union = monomial_product(s, t)
                if not slot_sign:
                    break
                sign *= slot_sign
                product.append(union)
            else:
                key = tuple(product)
                terms[key] = terms.get(key, 0) + sign * x * y
    return TensorElem(a.dims, terms)


def tcommutator(a: TensorElem, b: TensorElem) -> TensorElem:
    ab = tmul(a, b)
    ba = tmul(b, a)
    terms = dict(ab.terms)
    for key, c in ba.terms.items():
        terms[key] = terms.get(key, 0) - c
    return TensorElem(a.dims, terms)


class GrassmannTensor:
    """
    The algebra E_{r_1} ⊗ ... ⊗ E_{r_s} acting on TensorElem values.

    Exposes the small algebra interface used by polynomial evaluation
    (``one``, ``zero``, ``add``, ``scale``, ``mul``, ``is_zero``, ``owns``).
    """

    def __init__(self, dims: Iterable[SlotDim]) -> None:
        self.dims: tuple[SlotDim, ...] = tuple(dims)
        if not self.dims:
            raise UnsupportedError("a tensor product needs at least one slot")
        for dim in self.dims:
            _check_dim(dim)

    def __repr__(self) -> str:
        return "*".join("E" if dim is None else f"E{dim}" for dim in self.dims)

    def one(self) -> TensorElem:
        return TensorElem(self.dims, {(0,) * len(self.dims): Fraction(1)})

    def zero(self) -> TensorElem:
        return TensorElem(self.dims, {})

    def monomial(self, key: TensorMonomial, coefficient: Fraction | int = 1) -> TensorElem:
        return TensorElem(self.dims, {tuple(key): Fraction(coefficient)})

    def embed(self, slot: int, element: GrassmannElem) -> TensorElem:
        """1 ⊗ ... ⊗ element ⊗ ... ⊗ 1 with ``element`` in position ``slot`` (0-based)."""
        if element.dim != self.dims[slot]:
            raise DimensionMismatchError(f"slot {slot} has dimension {self.dims[slot]}, element has {element.dim}")
        empty = [0] * len(self.dims)
        terms = {}
        for m, c in element.terms.items():
            empty[slot] = m
            terms[tuple(empty)] = c
        return TensorElem(self.dims, terms)

    def pure(self, *factors: GrassmannElem) -> TensorElem:
        """The pure tensor factors[0] ⊗ factors[1] ⊗ ..."""
        if len(factors) != len(self.dims):
            raise DimensionMismatchError(f"expected {len(self.dims)} factors, got {len(factors)}")
        result = self.one()
        for slot, factor in enumerate(factors):
            result = tmul(result, self.embed(slot, factor))
        return result

    def generator(self, slot: int, index: int) -> TensorElem:
        return self.embed(slot, generator(index, self.dims[slot]))

    def owns(self, element: object) -> bool:
        return isinstance(element, TensorElem) and element.dims == self.dims

    def add(self, a: TensorElem, b: TensorElem) -> TensorElem:
        terms = dict(a.terms)
        for key, c in b.terms.items():
            terms[key] = terms.get(key, 0) + c
        return TensorElem(self.dims, terms)

    def scale(self, a: TensorElem, scalar: Fraction | int) -> TensorElem:
        return TensorElem(self.dims, {key: c * scalar for key, c in a.terms.items()})

    def mul(self, a: TensorElem, b: TensorElem) -> TensorElem:
        return tmul(a, b)

    def commutator(self, a: TensorElem, b: TensorElem) -> TensorElem:
        return tcommutator(a, b)

    def is_zero(self, a: TensorElem) -> bool:
        return a.is_zero()

    def render(self, a: TensorElem) -> str:
        return str(a)
