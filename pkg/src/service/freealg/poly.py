"""Noncommutative polynomials of the free unital associative algebra over the rationals."""
import logging
from collections import Counter
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, reduce
from itertools import permutations, product
from typing import TypeAlias

from service.core.errors import DimensionMismatchError, UnsupportedError

logger = logging.getLogger("service.freealg.poly")

Word: TypeAlias = tuple[int, ...]


class NcPoly:
    """
    Sparse map from words over variable indices to rational coefficients.

    The empty word is the unit. Instances are treated as immutable values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction | int] | None = None) -> None:
        self.terms: dict[Word, Fraction] = {tuple(w): Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, index: int) -> "NcPoly":
        if index < 1:
            raise UnsupportedError(f"variable indices start at 1, got {index}")
        return cls({(index,): 1})

    @classmethod
    def const(cls, value: Fraction | int) -> "NcPoly":
        return cls({(): value})

    @classmethod
    def word(cls, letters: Iterable[int], coefficient: Fraction | int = 1) -> "NcPoly":
        return cls({tuple(letters): coefficient})

    def _add_terms(self, other: "NcPoly", sign: int) -> "NcPoly":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + sign * c
        return NcPoly(terms)

    def __add__(self, other: "NcPoly | Fraction | int") -> "NcPoly":
        return self._add_terms(_as_poly(other), 1)

    __radd__ = __add__

    def __sub__(self, other: "NcPoly | Fraction | int") -> "NcPoly":
        return self._add_terms(_as_poly(other), -1)

    def __rsub__(self, other: "NcPoly | Fraction | int") -> "NcPoly":
        return _as_poly(other)._add_terms(self, -1)

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "NcPoly | Fraction | int") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NcPoly({w: c * other for w, c in self.terms.items()})
        terms: dict[Word, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                terms[w] = terms.get(w, 0) + a * b
        return NcPoly(terms)

    def __rmul__(self, scalar: Fraction | int) -> "NcPoly":
        return NcPoly({w: c * scalar for w, c in self.terms.items()})

    def __truediv__(self, scalar: Fraction | int) -> "NcPoly":
        return NcPoly({w: c / scalar for w, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "NcPoly":
        if exponent < 0:
            raise UnsupportedError("negative powers are not defined in the free algebra")
        return reduce(lambda acc, _: acc * self, range(exponent), NcPoly.const(1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = NcPoly.const(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> list[int]:
        return sorted({letter for w in self.terms for letter in w})

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def multidegree(self) -> dict[int, int] | None:
        """Per-variable degree if every word has the same one, else None."""
        degrees = {frozenset(Counter(w).items()) for w in self.terms}
        if len(degrees) != 1:
            return None if degrees else {}
        return dict(next(iter(degrees)))

    def multihomogeneous_components(self) -> list["NcPoly"]:
        components: dict[frozenset, dict[Word, Fraction]] = {}
        for w, c in self.terms.items():
            components.setdefault(frozenset(Counter(w).items()), {})[w] = c
        return [NcPoly(terms) for _, terms in sorted(components.items(), key=lambda item: sorted(item[0]))]

    def multilinear_degree(self) -> int | None:
        """n if every word is a permutation of (1..n), else None."""
        if not self.terms:
            return None
        n = len(next(iter(self.terms)))
        target = tuple(range(1, n + 1))
        if all(tuple(sorted(w)) == target for w in self.terms):
            return n
        return None

    def substitute_unit(self, index: int) -> "NcPoly":
        """The polynomial obtained by setting x_index = 1."""
        terms: dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            reduced = tuple(letter for letter in w if letter != index)
            terms[reduced] = terms.get(reduced, 0) + c
        return NcPoly(terms)

    def rename(self, mapping: Mapping[int, int]) -> "NcPoly":
        terms: dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            renamed = tuple(mapping.get(letter, letter) for letter in w)
            terms[renamed] = terms.get(renamed, 0) + c
        return NcPoly(terms)

    def __repr__(self) -> str:
        return f"NcPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, w in enumerate(sorted(self.terms, key=lambda w: (len(w), w))):
            c = self.terms[w]
            body = "*".join(f"x{letter}" for letter in w)
            sign = "-" if c < 0 else ("" if i == 0 else "+")
            magnitude = abs(c)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            out.append(f"{sign}{text}" if i == 0 else f" {sign} {text}")
        return "".join(out)


def _as_poly(value: "NcPoly | Fraction | int") -> NcPoly:
    return value if isinstance(value, NcPoly) else NcPoly.const(value)


def x(index: int) -> NcPoly:
    return NcPoly.var(index)


def commutator(a: NcPoly, b: NcPoly) -> NcPoly:
    return a * b - b * a


def long_commutator(items: Sequence[NcPoly]) -> NcPoly:
    """
    Left-normed commutator [u_1, ..., u_k] = [[u_1, ..., u_{k-1}], u_k].

    Raises:
        UnsupportedError: If fewer than two entries are given.
    """
    if len(items) < 2:
        raise UnsupportedError("a commutator needs at least two entries")
    return reduce(commutator, items[1:], items[0])


def commutator_of_variables(*indices: int) -> NcPoly:
    return long_commutator([x(i) for i in indices])


def permutation_sign(sequence: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(sequence)) for j in range(i + 1, len(sequence)) if sequence[i] > sequence[j])
    return -1 if inversions & 1 else 1


def standard_poly(m: int, variables: Sequence[int] | None = None) -> NcPoly:
    """s_m(x_1, ..., x_m), or s_m evaluated on the given variable indices."""
    if m < 1:
        raise UnsupportedError("standard polynomials start at degree 1")
    letters = tuple(variables) if variables is not None else tuple(range(1, m + 1))
    if len(letters) != m:
        raise DimensionMismatchError(f"s_{m} takes {m} variables, got {len(letters)}")
    terms = {}
    for sigma in permutations(range(m)):
        terms[tuple(letters[i] for i in sigma)] = permutation_sign(sigma)
    return NcPoly(terms)


def _alternating_sum(size: int, body: Callable[[tuple[int, ...]], NcPoly]) -> NcPoly:
    terms: dict[Word, Fraction] = {}
    for sigma in permutations(range(1, size + 1)):
        sign = permutation_sign(sigma)
        for w, c in body(sigma).terms.items():
            terms[w] = terms.get(w, 0) + sign * c
    return NcPoly(terms)


def _double_commutators(letters: Sequence[int]) -> NcPoly:
    result = NcPoly.const(1)
    for a, b in zip(letters[0::2], letters[1::2], strict=True):
        result = result * commutator(x(a), x(b))
    return result


def standard_commutator_form(m: int) -> NcPoly:
    """2^{-m/2} Σ_σ (−1)^σ [x_σ(1), x_σ(2)]⋯[x_σ(m−1), x_σ(m)], which equals s_m for m = 2, 4."""
    if m < 2 or m % 2:
        raise UnsupportedError(f"needs a positive even degree, got {m}")
    return _alternating_sum(m, _double_commutators) / 2 ** (m // 2)


def make_g(i: int, degree: int) -> NcPoly:
    """
    The polynomial families g_i^{(j)} built from alternating sums of double commutators.

    With ``j`` the half degree (``degree = 2j - 1`` or ``2j``), every family starts with
    ``j - 2`` double commutators, possibly none, followed by a closing bracket:

    * odd, i=1: ``[x_s, x1, x1]`` summed over S_{2j-3}
    * odd, i=2: ``[x2, x1, x_s]`` summed over S_{2j-3}
    * odd, i=3: ``[x_s, x_t, x1]`` summed over S_{2j-2}
    * even, i=1: ``[x_s, x_t, x1, x1]`` summed over S_{2j-2}
    * even, i=2: ``[x1, x2] * s_{2j-2}``
    * even, i=3: ``[x_s, x_t, [x_u, x1]]`` summed over S_{2j-1}

    Args:
        i (int): Family index 1, 2 or 3.
        degree (int): Total degree of the polynomial.

    Returns:
        NcPoly: The polynomial.

    Raises:
        UnsupportedError: If the (i, parity, j) combination is not defined.
    """
    if i not in (1, 2, 3):
        raise UnsupportedError(f"g-families are indexed by 1, 2, 3, got {i}")
    if degree % 2:
        j = (degree + 1) // 2
        if j < 3:
            raise UnsupportedError(f"g_{i} of odd degree {degree} needs j >= 3")
        lead = 2 * j - 4
        if i == 1:
            return _alternating_sum(2 * j - 3, lambda s: _double_commutators(s[:lead]) * long_commutator([x(s[lead]), x(1), x(1)]))
        if i == 2:
            return _alternating_sum(2 * j - 3, lambda s: _double_commutators(s[:lead]) * long_commutator([x(2), x(1), x(s[lead])]))
        return _alternating_sum(2 * j - 2, lambda s: _double_commutators(s[:lead]) * long_commutator([x(s[lead]), x(s[lead + 1]), x(1)]))
    j = degree // 2
    if j < 2 or (i == 3 and j < 3):
        raise UnsupportedError(f"g_{i} of even degree {degree} is not defined")
    lead = 2 * j - 4
    if i == 1:
        return _alternating_sum(2 * j - 2, lambda s: _double_commutators(s[:lead]) * long_commutator([x(s[lead]), x(s[lead + 1]), x(1), x(1)]))
    if i == 2:
        return commutator(x(1), x(2)) * standard_poly(2 * j - 2)
    return _alternating_sum(
        2 * j - 1,
        lambda s: _double_commutators(s[:lead]) * long_commutator([x(s[lead]), x(s[lead + 1]), commutator(x(s[lead + 2]), x(1))]),
    )


@cache
def word_index(n: int) -> dict[Word, int]:
    """Column index of every multilinear word of degree n, in lexicographic order."""
    return {w: i for i, w in enumerate(permutations(range(1, n + 1)))}


@cache
def words_of_degree(n: int) -> tuple[Word, ...]:
    return tuple(permutations(range(1, n + 1)))


@dataclass(frozen=True)
class MultilinearPoly:
    """A polynomial of P_n: every word is a permutation of (1, ..., n)."""

    poly: NcPoly
    degree: int

    def __post_init__(self) -> None:
        target = tuple(range(1, self.degree + 1))
        for w in self.poly.terms:
            if tuple(sorted(w)) != target:
                raise DimensionMismatchError(f"word {w} is not a permutation of 1..{self.degree}")

    @classmethod
    def of(cls, poly: NcPoly) -> "MultilinearPoly":
        """Wraps a multilinear NcPoly, inferring the degree."""
        n = poly.multilinear_degree()
        if n is None:
            raise UnsupportedError(f"{poly} is not multilinear in x1..xn")
        return cls(poly, n)

    @classmethod
    def from_vector(cls, vector: Mapping[int, Fraction | int], degree: int) -> "MultilinearPoly":
        words = words_of_degree(degree)
        return cls(NcPoly({words[i]: c for i, c in vector.items()}), degree)

    def vector(self) -> dict[int, Fraction]:
        index = word_index(self.degree)
        return {index[w]: c for w, c in self.poly.terms.items()}

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __str__(self) -> str:
        return str(self.poly)


def sn_act(sigma: Sequence[int], f: MultilinearPoly) -> MultilinearPoly:
    """
    Renames x_i to x_{sigma(i)} in every word; ``sigma`` is given in one-line notation
    ``(sigma(1), ..., sigma(n))``.

    Raises:
        DimensionMismatchError: If sigma is not a permutation of 1..deg f.
    """
    if sorted(sigma) != list(range(1, f.degree + 1)):
        raise DimensionMismatchError(f"{tuple(sigma)} is not a permutation of 1..{f.degree}")
    mapping = {i + 1: image for i, image in enumerate(sigma)}
    return MultilinearPoly(f.poly.rename(mapping), f.degree)


def multilinearize(f: NcPoly) -> MultilinearPoly:
    """
    Complete multilinearization.

    A variable of degree d is replaced by d copies: the first copy keeps its index, the
    others get fresh indices numbered after the existing variables in ascending order of
    (original variable, copy number). The result sums, for every word, all ways of
    distributing the copies over the occurrences. The variables of every multihomogeneous
    component are first renumbered to 1..m preserving their order. Already multilinear input is returned unchanged.

    Raises:
        UnsupportedError: If the multihomogeneous components have different total degrees.
    """
    if f.is_zero():
        return MultilinearPoly(f, 0)
    if (n := f.multilinear_degree()) is not None:
        return MultilinearPoly(f, n)
    components = f.multihomogeneous_components()
    if len({c.degree() for c in components}) != 1:
        raise UnsupportedError("components of different total degree cannot be multilinearized together")
    result = NcPoly()
    for component in components:
        compact = {old: new for new, old in enumerate(component.variables(), start=1)}
        result = result + _multilinearize_component(component.rename(compact))
    return MultilinearPoly.of(result) if not result.is_zero() else MultilinearPoly(result, f.degree())


def _multilinearize_component(f: NcPoly) -> NcPoly:
    degrees = f.multidegree() or {}
    total_vars = max(f.variables(), default=0)
    copies: dict[int, list[int]] = {}
    fresh = total_vars
    for variable in range(1, total_vars + 1):
        copies[variable] = [variable]
        for _ in range(degrees.get(variable, 0) - 1):
            fresh += 1
            copies[variable].append(fresh)
    terms: dict[Word, Fraction] = {}
    for w, c in f.terms.items():
        positions: dict[int, list[int]] = {}
        for position, letter in enumerate(w):
            positions.setdefault(letter, []).append(position)
        letters = sorted(positions)
        for choice in product(*(permutations(copies[letter]) for letter in letters)):
            out = list(w)
            for letter, assignment in zip(letters, choice, strict=True):
                for position, copy in zip(positions[letter], assignment, strict=True):
                    out[position] = copy
            key = tuple(out)
            terms[key] = terms.get(key, 0) + c
    return NcPoly(terms)


def substitute_unit(f: NcPoly | MultilinearPoly, index: int) -> NcPoly:
    """f with x_index replaced by 1."""
    poly = f.poly if isinstance(f, MultilinearPoly) else f
    return poly.substitute_unit(index)
