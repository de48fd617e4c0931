"""Finite-basis unital associative algebras given by structure constants."""
import logging
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import TypeAlias

import numpy as np

from service.core.errors import ConstructionError, DimensionMismatchError, InconsistentSystemError, SizeGuardError, UnsupportedError
from service.exactla import SparseVec, solve, sparse
from service.grassmann import GMonomial, monomial_order, monomial_product, render_monomial
from settings import get_settings

logger = logging.getLogger("service.algebras.structure")

BasisProduct: TypeAlias = Callable[[int, int], SparseVec]
Support: TypeAlias = tuple[GMonomial | None, ...]

MAX_MATERIALIZED_GRASSMANN = 24


@dataclass(frozen=True, eq=False)
class AlgebraElem:
    """An element of a FiniteAlgebra: sparse coordinates over its basis."""

    algebra: "FiniteAlgebra"
    terms: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", sparse(self.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((id(self.algebra), tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return self.algebra.render(self)


class FiniteAlgebra:
    """
    Unital associative algebra with a finite basis.

    The multiplication is given by a function ``(i, j) -> SparseVec`` on basis indices whose
    results are memoized, so tables of tensor products are filled in lazily. Algebras built
    from Grassmann factors also record, per basis element, the generator bit set used in
    every Grassmann slot (``None`` in the other slots).
    """

    def __init__(
        self,
        name: str,
        dim: int,
        unit_index: int,
        basis_product: BasisProduct,
        label: Callable[[int], str],
        supports: Callable[[int], Support] | None = None,
    ) -> None:
        self.name = name
        self.dim = dim
        self.unit_index = unit_index
        self._basis_product = basis_product
        self._label = label
        self._supports = supports
        self._table: dict[tuple[int, int], SparseVec] = {}

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name}, dim={self.dim})"

    @classmethod
    def from_table(cls, name: str, labels: Sequence[str], unit_index: int, table: Mapping[tuple[int, int], Mapping[int, Fraction | int]]) -> "FiniteAlgebra":
        """Algebra from an explicit (sparse) table; missing pairs multiply to zero."""
        frozen = {key: sparse(value) for key, value in table.items()}
        labels = list(labels)
        if not 0 <= unit_index < len(labels):
            raise ConstructionError(f"unit index {unit_index} outside the basis of {name}")
        return cls(name, len(labels), unit_index, lambda i, j: frozen.get((i, j), {}), labels.__getitem__)

    def basis_product(self, i: int, j: int) -> SparseVec:
        key = (i, j)
        if (cached := self._table.get(key)) is None:
            cached = self._table[key] = self._basis_product(i, j)
        return cached

    def label(self, i: int) -> str:
        return self._label(i)

    @property
    def basis_labels(self) -> list[str]:
        return [self._label(i) for i in range(self.dim)]

    @property
    def is_grassmann_built(self) -> bool:
        return self._supports is not None

    def grassmann_supports(self, i: int) -> Support | None:
        """Per-slot generator bit sets of basis element i, or None if nothing is known."""
        return self._supports(i) if self._supports is not None else None

    def owns(self, element: object) -> bool:
        return isinstance(element, AlgebraElem) and element.algebra is self

    def element(self, terms: Mapping[int, Fraction | int]) -> AlgebraElem:
        for index in terms:
            if not 0 <= index < self.dim:
                raise DimensionMismatchError(f"basis index {index} outside {self.name}")
        return AlgebraElem(self, {i: Fraction(c) for i, c in terms.items()})

    def basis(self, i: int) -> AlgebraElem:
        return self.element({i: 1})

    def one(self) -> AlgebraElem:
        return self.basis(self.unit_index)

    def zero(self) -> AlgebraElem:
        return AlgebraElem(self, {})

    def _check(self, *elements: AlgebraElem) -> None:
        for element in elements:
            if not self.owns(element):
                raise DimensionMismatchError(f"element does not belong to {self.name}")

    def add(self, a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
        self._check(a, b)
        terms = dict(a.terms)
        for i, c in b.terms.items():
            terms[i] = terms.get(i, 0) + c
        return AlgebraElem(self, terms)

    def scale(self, a: AlgebraElem, scalar: Fraction | int) -> AlgebraElem:
        self._check(a)
        return AlgebraElem(self, {i: c * scalar for i, c in a.terms.items()})

    def mul(self, a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
        self._check(a, b)
        terms: dict[int, Fraction] = {}
        for i, c in a.terms.items():
            for j, d in b.terms.items():
                for k, e in self.basis_product(i, j).items():
                    terms[k] = terms.get(k, 0) + c * d * e
        return AlgebraElem(self, terms)

    def commutator(self, a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
        return self.add(self.mul(a, b), self.scale(self.mul(b, a), -1))

    def is_zero(self, a: AlgebraElem) -> bool:
        return a.is_zero()

    def render(self, a: AlgebraElem) -> str:
        if not a.terms:
            return "0"
        parts = []
        for position, (i, c) in enumerate(sorted(a.terms.items())):
            sign = "-" if c < 0 else ("" if position == 0 else "+")
            magnitude = abs(c)
            body = self.label(i) if magnitude == 1 else f"{magnitude}·{self.label(i)}"
            parts.append(f"{sign}{body}" if position == 0 else f" {sign} {body}")
        return "".join(parts)

    def validate(self, *, seed: int | None = None, exhaustive_dim: int | None = None, samples: int | None = None) -> None:
        """
        Checks associativity and the two-sided unit.

        All basis triples are checked up to ``exhaustive_dim``; above it, ``samples`` random
        triples drawn with ``seed``.

        Raises:
            ConstructionError: On the first failing triple or unit product.
        """
        settings = get_settings()
        exhaustive_dim = exhaustive_dim if exhaustive_dim is not None else settings.VALIDATION_EXHAUSTIVE_DIM
        samples = samples if samples is not None else settings.VALIDATION_SAMPLES
        seed = seed if seed is not None else settings.DEFAULT_SEED
        for i in range(self.dim):
            expected = {i: Fraction(1)}
            if self.basis_product(self.unit_index, i) != expected or self.basis_product(i, self.unit_index) != expected:
                raise ConstructionError(f"{self.label(self.unit_index)} is not a unit on {self.label(i)} in {self.name}")
        if self.dim <= exhaustive_dim:
            triples: Iterable[tuple[int, int, int]] = product(range(self.dim), repeat=3)
        else:
            rng = np.random.default_rng(seed)
            triples = (tuple(int(v) for v in row) for row in rng.integers(0, self.dim, size=(samples, 3)))
        for i, j, k in triples:
            a, b, c = self.basis(i), self.basis(j), self.basis(k)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ConstructionError(f"{self.name} is not associative on ({self.label(i)}, {self.label(j)}, {self.label(k)})")
        logger.debug(f"{self.name} validated")


def grassmann_basis(r: int) -> list[GMonomial]:
    """Monomials of E_r in canonical order: by degree, then by bit set value."""
    return sorted(range(1 << r), key=monomial_order)


def make_grassmann(r: int, *, validate: bool = True) -> FiniteAlgebra:
    """
    E_r with basis the 2^r monomials in canonical order.

    Raises:
        UnsupportedError: If r is outside 2..24.
    """
    if not 2 <= r <= MAX_MATERIALIZED_GRASSMANN:
        raise UnsupportedError(f"materialized Grassmann algebras need 2 <= r <= {MAX_MATERIALIZED_GRASSMANN}, got {r}")
    monomials = grassmann_basis(r)
    position = {m: i for i, m in enumerate(monomials)}

    def basis_product(i: int, j: int) -> SparseVec:
        sign, union = monomial_product(monomials[i], monomials[j])
        return {position[union]: Fraction(sign)} if sign else {}

    algebra = FiniteAlgebra(f"E{r}", 1 << r, 0, basis_product, lambda i: render_monomial(monomials[i]), lambda i: (monomials[i],))
    if validate:
        algebra.validate()
    return algebra


def _nk_matrices(k: int) -> tuple[list[str], list[np.ndarray]]:
    shift = np.eye(k, k, 1, dtype=np.int64)
    labels = ["I"]
    matrices = [np.eye(k, dtype=np.int64)]
    power = np.eye(k, dtype=np.int64)
    for exponent in range(1, k - 1):
        power = power @ shift
        labels.append("J" if exponent == 1 else f"J^{exponent}")
        matrices.append(power.copy())
    for column in range(2, k + 1):
        unit = np.zeros((k, k), dtype=np.int64)
        unit[0, column - 1] = 1
        labels.append(f"e1{column}" if k < 10 else f"e1,{column}")
        matrices.append(unit)
    return labels, matrices


def make_nk(k: int, *, validate: bool = True) -> FiniteAlgebra:
    """
    N_k: the span of I, J, ..., J^{k-2}, e_12, ..., e_1k inside k×k matrices, where J is the
    nilpotent shift. Products of basis matrices are re-expressed in the basis by an exact
    solve.

    Raises:
        UnsupportedError: If k < 3.
        ConstructionError: If a product leaves the span.
    """
    if k < 3:
        raise UnsupportedError(f"N_k needs k >= 3, got {k}")
    labels, matrices = _nk_matrices(k)
    columns = np.stack([m.reshape(-1) for m in matrices], axis=1)
    coefficient_rows = columns.tolist()
    table: dict[tuple[int, int], SparseVec] = {}
    for i, a in enumerate(matrices):
        for j, b in enumerate(matrices):
            target = (a @ b).reshape(-1).tolist()
            try:
                solution = solve(coefficient_rows, target)
            except InconsistentSystemError as e:
                raise ConstructionError(f"{labels[i]}·{labels[j]} leaves the span of N_{k}") from e
            table[(i, j)] = sparse(dict(enumerate(solution)))
    algebra = FiniteAlgebra(f"N{k}", len(labels), 0, lambda i, j: table.get((i, j), {}), labels.__getitem__)
    if validate:
        algebra.validate()
    return algebra


def _mixed_radix(dims: Sequence[int]) -> list[int]:
    strides = [1] * len(dims)
    for position in range(len(dims) - 2, -1, -1):
        strides[position] = strides[position + 1] * dims[position + 1]
    return strides


def tensor(algebras: Sequence[FiniteAlgebra], *, max_dim: int | None = None, validate: bool = False) -> FiniteAlgebra:
    """
    Ungraded tensor product: basis tuples, ``(a⊗b)(c⊗d) = ac ⊗ bd``, no signs across slots.

    The first factor is the most significant digit of the basis index.

    Raises:
        SizeGuardError: If the product of dimensions exceeds ``max_dim``.
    """
    if not algebras:
        raise UnsupportedError("tensor product of an empty list")
    if len(algebras) == 1:
        return algebras[0]
    limit = max_dim if max_dim is not None else get_settings().MAX_ALGEBRA_DIM
    dims = [algebra.dim for algebra in algebras]
    total = int(np.prod(dims, dtype=object))
    if total > limit:
        raise SizeGuardError(f"tensor product of dimension {total} exceeds the cap {limit}")
    strides = _mixed_radix(dims)

    def digits(i: int) -> list[int]:
        return [(i // stride) % dim for stride, dim in zip(strides, dims, strict=True)]

    def basis_product(i: int, j: int) -> SparseVec:
        result: dict[int, Fraction] = {0: Fraction(1)}
        for algebra, stride, a, b in zip(algebras, strides, digits(i), digits(j), strict=True):
            factor = algebra.basis_product(a, b)
            if not factor:
                return {}
            result = {index + k * stride: c * d for index, c in result.items() for k, d in factor.items()}
        return result

    def label(i: int) -> str:
        return " ⊗ ".join(algebra.label(d) for algebra, d in zip(algebras, digits(i), strict=True))

    def supports(i: int) -> Support:
        out: list[GMonomial | None] = []
        for algebra, d in zip(algebras, digits(i), strict=True):
            out.extend(algebra.grassmann_supports(d) or (None,))
        return tuple(out)

    unit = sum(algebra.unit_index * stride for algebra, stride in zip(algebras, strides, strict=True))
    name = "*".join(algebra.name for algebra in algebras)
    grassmann_built = any(algebra.is_grassmann_built for algebra in algebras)
    algebra = FiniteAlgebra(name, total, unit, basis_product, label, supports if grassmann_built else None)
    if validate:
        algebra.validate()
    logger.debug(f"Built {name} of dimension {total}")
    return algebra

