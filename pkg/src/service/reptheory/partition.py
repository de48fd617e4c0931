"""Integer partitions, Young diagram hooks and conjugacy classes of S_n."""
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cache
from math import factorial, prod

from sympy.utilities.iterables import partitions

from service.core.errors import UnsupportedError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts, rendered as ``(3,1,1)``."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(part <= 0 for part in parts) or any(a < b for a, b in zip(parts, parts[1:], strict=False)):
            raise UnsupportedError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Builds a partition from parts in any order, dropping zeros."""
        return cls(tuple(sorted((part for part in parts if part), reverse=True)))

    @classmethod
    def hook(cls, arm: int, leg: int) -> "Partition":
        """The hook shape (arm + 1, 1^leg)."""
        return cls.of(arm + 1, *[1] * leg)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index] if index < len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for part in self.parts if part > column) for column in range(self.parts[0])))

    def hook_length(self, row: int, column: int) -> int:
        """Arm + leg + 1 of the cell (row, column), both 0-based."""
        return self.parts[row] - column + self.conjugate().parts[column] - row - 1

    def hooks(self) -> list[int]:
        """Hook lengths in row-major order."""
        conjugate = self.conjugate()
        return [part - column + conjugate.parts[column] - row - 1 for row, part in enumerate(self.parts) for column in range(part)]

    def sign(self) -> int:
        """Sign of a permutation whose cycle type is this partition."""
        return -1 if (self.n - len(self.parts)) % 2 else 1


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first and (1^n) last."""
    if n < 0:
        raise UnsupportedError(f"cannot partition {n}")
    found = []
    for multiplicities in partitions(n):
        parts: list[int] = []
        for part, count in multiplicities.items():
            parts.extend([part] * count)
        found.append(Partition.of(*parts))
    return tuple(sorted(found, reverse=True))


def hook_dim(shape: Partition) -> int:
    """dim M(λ) by the hook length formula."""
    return factorial(shape.n) // prod(shape.hooks())


def centralizer_order(cycle_type: Partition) -> int:
    """z_μ = Π i^{m_i} m_i!, so the class has n!/z_μ elements."""
    return prod(part**count * factorial(count) for part, count in Counter(cycle_type.parts).items())


def class_size(cycle_type: Partition) -> int:
    return factorial(cycle_type.n) // centralizer_order(cycle_type)


def class_representative(cycle_type: Partition) -> tuple[int, ...]:
    """
    A permutation of the given cycle type in one-line notation.

    Cycles are laid out on consecutive letters: (1 2 ... μ_1)(μ_1+1 ...)...
    """
    image = []
    start = 1
    for length in cycle_type.parts:
        image.extend([*range(start + 1, start + length), start])
        start += length
    return tuple(image)


def cycle_type(sigma: Iterable[int]) -> Partition:
    """Cycle type of a permutation in one-line notation."""
    image = list(sigma)
    seen = [False] * len(image)
    lengths = []
    for start in range(len(image)):
        length = 0
        current = start
        while not seen[current]:
            seen[current] = True
            current = image[current] - 1
            length += 1
        if length:
            lengths.append(length)
    return Partition.of(*lengths)
