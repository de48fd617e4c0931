"""Domain results of identity checks."""
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from service.core.errors import VerificationError

from .entity import IdentityVerdictEntity, WitnessEntity


@dataclass(frozen=True)
class ParityPattern:
    """
    Odd/EvenUnit assignment per (variable, tensor slot).

    ``masks[j]`` has bit ``i - 1`` set when variable ``x_i`` is Odd in slot ``j``.
    """

    degree: int
    masks: tuple[int, ...]

    def is_odd(self, variable: int, slot: int) -> bool:
        return bool(self.masks[slot] >> (variable - 1) & 1)

    def odd_count(self, slot: int) -> int:
        return self.masks[slot].bit_count()

    def feasible(self, capacities: Sequence[int | None]) -> bool:
        return all(r is None or mask.bit_count() <= r for mask, r in zip(self.masks, capacities, strict=True))

    def matrix(self) -> list[list[str]]:
        """Rows are variables, columns are slots."""
        return [["Odd" if self.is_odd(i, j) else "EvenUnit" for j in range(len(self.masks))] for i in range(1, self.degree + 1)]


@dataclass(frozen=True)
class Witness:
    arguments: tuple[Any, ...]
    value: Any
    pattern: ParityPattern | None = None
    basis_indices: tuple[int, ...] | None = None


@dataclass(frozen=True)
class IdentityVerdict:
    is_identity: bool
    witness: Witness | None = None
    method: str = ""

    def __post_init__(self) -> None:
        if self.is_identity == (self.witness is not None):
            raise VerificationError("a witness is present exactly when the polynomial is not an identity")

    def to_entity(self) -> IdentityVerdictEntity:
        if self.witness is None:
            return IdentityVerdictEntity(is_identity=True, method=self.method)
        return IdentityVerdictEntity(
            is_identity=False,
            method=self.method,
            witness=WitnessEntity(
                pattern=self.witness.pattern.matrix() if self.witness.pattern is not None else None,
                arguments=[str(arg) for arg in self.witness.arguments],
                value=str(self.witness.value),
            ),
        )
