import logging
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from service.core.errors import SizeGuardError, UnsupportedError, VerificationError
from service.freealg import quotient_character
from settings import get_settings

from .character import mn_character
from .entity import ComponentEntity, DecompositionEntity
from .partition import Partition, class_representative, class_size, hook_dim, partitions_of

logger = logging.getLogger("service.reptheory.decompose")


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities m_λ of irreducible S_n-modules M(λ); only nonzero ones are stored."""

    n: int
    multiplicities: tuple[tuple[Partition, int], ...]

    @classmethod
    def of(cls, n: int, multiplicities: Mapping[Partition, int]) -> "Decomposition":
        for shape in multiplicities:
            if shape.n != n:
                raise UnsupportedError(f"{shape} is not a partition of {n}")
        return cls(n, tuple((shape, m) for shape, m in sorted(multiplicities.items(), reverse=True) if m))

    @property
    def dimension(self) -> int:
        return sum(m * hook_dim(shape) for shape, m in self.multiplicities)

    def multiplicity(self, shape: Partition) -> int:
        return dict(self.multiplicities).get(shape, 0)

    def shapes(self) -> list[Partition]:
        return [shape for shape, _ in self.multiplicities]

    def __str__(self) -> str:
        if not self.multiplicities:
            return "0"
        return " + ".join(f"{m if m > 1 else ''}M{shape}" for shape, m in self.multiplicities)

    def to_entity(self, label: str = "") -> DecompositionEntity:
        return DecompositionEntity(
            label=label,
            n=self.n,
            components=[ComponentEntity(partition=str(shape), multiplicity=m, dim=hook_dim(shape)) for shape, m in self.multiplicities],
            dimension=self.dimension,
        )


def decompose_character(n: int, traces: Mapping[Partition, int]) -> Decomposition:
    """
    Multiplicities m_λ = (1/n!) Σ_μ |C_μ| χ_λ(μ) tr(μ) from one trace per cycle type.

    Raises:
        VerificationError: If some m_λ is negative or not an integer.
    """
    multiplicities = {}
    for shape in partitions_of(n):
        total = Fraction(sum(class_size(mu) * mn_character(shape, mu) * trace for mu, trace in traces.items()), factorial(n))
        if total.denominator != 1 or total < 0:
            raise VerificationError(f"character has multiplicity {total} on M{shape}")
        multiplicities[shape] = int(total)
    return Decomposition.of(n, multiplicities)


def check_decomposable(n: int, max_degree: int | None = None) -> int:
    limit = max_degree if max_degree is not None else get_settings().EXACT_RANK_MAX_DEGREE
    if n > limit:
        raise SizeGuardError(f"decomposition of degree {n} is above the guard {limit}")
    return limit


def class_representatives(n: int) -> tuple[list[Partition], list[tuple[int, ...]]]:
    """Cycle types of S_n and one permutation of each, in the order of ``partitions_of``."""
    classes = list(partitions_of(n))
    return classes, [class_representative(mu) for mu in classes]


def decompose_quotient(n: int, p: int, *, max_degree: int | None = None) -> Decomposition:
    """
    Decomposition of Γ_n(N_p), the proper multilinear polynomials modulo I_{p+1}.

    Args:
        n (int): Degree.
        p (int): Lie nilpotency index.
        max_degree (int | None): Degree guard, defaults to ``EXACT_RANK_MAX_DEGREE``.

    Raises:
        SizeGuardError: If n is above the guard.
        VerificationError: If the traces do not form a character.
    """
    limit = check_decomposable(n, max_degree)
    if n <= 1:
        return Decomposition.of(n, {Partition(()): 1} if n == 0 else {})
    classes, representatives = class_representatives(n)
    traces = quotient_character(n, p, representatives, max_degree=limit)
    decomposition = decompose_character(n, dict(zip(classes, traces, strict=True)))
    logger.info(f"Gamma_{n}(N_{p}) = {decomposition}")
    return decomposition


def _did_shapes(n: int, accept: Callable[[int, int, int], bool]) -> Iterator[Partition]:
    """Shapes (a+2, 2^b, 1^c) of n with b + c > 0 accepted by ``accept(a, b, c)``."""
    for a in range(n - 2):
        for b in range((n - a - 2) // 2 + 1):
            c = n - a - 2 - 2 * b
            if b + c > 0 and accept(a, b, c):
                yield Partition.of(a + 2, *[2] * b, *[1] * c)


def _with_sign_module(n: int, shapes: list[Partition], epsilon: bool) -> Decomposition:
    multiplicities = dict.fromkeys(shapes, 1)
    if epsilon:
        sign = Partition.of(*[1] * n)
        if sign in multiplicities:
            raise VerificationError(f"M{sign} enters twice")
        multiplicities[sign] = 1
    return Decomposition.of(n, multiplicities)


def did_gamma(n: int, l: int) -> Decomposition:
    """
    Γ_n(E ⊗ E_{2l}) = Σ M(a+2, 2^b, 1^c) + ε_n M(1^n) with a ≥ 0, b + c > 0, a + b + 1 ≤ 2l and
    ε_n = 1 exactly for even n.
    """
    if n < 2 or l < 1:
        raise UnsupportedError(f"needs n >= 2 and l >= 1, got n={n}, l={l}")
    shapes = list(_did_shapes(n, lambda a, b, c: a + b + 1 <= 2 * l))
    return _with_sign_module(n, shapes, n % 2 == 0)


def did_gamma_finite(n: int, m: int, l: int) -> Decomposition:
    """
    Γ_n(E_{2m} ⊗ E_{2l}) for m ≥ l ≥ 1.

    The shapes (a+2, 2^b, 1^c) need h_12 = a + b + 1 ≤ 2l and either
    h_11 + h_12 − 1 = n + a < 2(m + l), or equality there together with an even h_12.
    ε_n = 1 for even n ≤ 2(m + l).
    """
    if n < 2 or not m >= l >= 1:
        raise UnsupportedError(f"needs n >= 2 and m >= l >= 1, got n={n}, m={m}, l={l}")
    bound = 2 * (m + l)

    def accept(a: int, b: int, c: int) -> bool:
        h12 = a + b + 1
        return h12 <= 2 * l and (n + a < bound or (n + a == bound and h12 % 2 == 0))

    return _with_sign_module(n, list(_did_shapes(n, accept)), n % 2 == 0 and n <= bound)


def intro_partitions(n: int, p: int) -> list[Partition]:
    """
    Shapes λ ⊢ n guaranteed to occur in Γ_n(N_p), p = 2k or 2k + 1.

    Always (p−1, 1), (p−1, p−1), the shapes (a+2, 2^b, 1^c) with a + b + 1 ≤ 2k − 2, and
    (l+3, l+1, 1^*), (l+2, l+2, 1^*), (l+2, l+1, 1^*) for l ≤ k − 2, plus (1^n) for even n.
    For odd p and n ≤ 4k also (a+2, 2^b) with b > 0, a + b + 1 = 2k and
    (a+2, 2^b, 1) with a + b + 1 = 2k − 1.
    """
    if p < 2:
        raise UnsupportedError(f"p must be at least 2, got {p}")
    k = p // 2
    found: set[Partition] = set()

    def add(*parts: int) -> None:
        if sum(parts) == n and all(part >= 0 for part in parts):
            found.add(Partition.of(*parts))

    add(p - 1, 1)
    add(p - 1, p - 1)
    found.update(_did_shapes(n, lambda a, b, c: a + b + 1 <= 2 * k - 2))
    for l in range(k - 1):
        if n >= 2 * l + 4:
            add(l + 3, l + 1, *[1] * (n - 2 * l - 4))
            add(l + 2, l + 2, *[1] * (n - 2 * l - 4))
        if n >= 2 * l + 3:
            add(l + 2, l + 1, *[1] * (n - 2 * l - 3))
    if n % 2 == 0 and n >= 2:
        add(*[1] * n)
    if p % 2 and n <= 4 * k:
        for a in range(2 * k):
            b = 2 * k - 1 - a
            if b > 0:
                add(a + 2, *[2] * b)
            if 2 * k - 2 - a >= 0:
                add(a + 2, *[2] * (2 * k - 2 - a), 1)
    return sorted(found, reverse=True)


def e_tensor_lead(l: int) -> Fraction:
    """Leading coefficient of γ_n(E ⊗ E_{2l}): the hooks of size 2l summed, over (2l)!."""
    if l < 1:
        raise UnsupportedError(f"l must be at least 1, got {l}")
    size = 2 * l
    return Fraction(sum(hook_dim(Partition.hook(size - 1 - leg, leg)) for leg in range(size)), factorial(size))
