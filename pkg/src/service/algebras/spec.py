"""Algebra spec strings (``E``, ``E3``, ``N4``, ``@file.json`` joined by ``*``) and materialization."""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ValidationError

from service.core.errors import ConstructionError, SizeGuardError, SpecParseError, UnsupportedError
from service.grassmann import MAX_GENERATORS
from settings import get_settings

from .structure import FiniteAlgebra, make_grassmann, make_nk, tensor

logger = logging.getLogger("service.algebras.spec")

_SLOT = re.compile(r"^(?:(?P<kind>[EN])(?P<size>\d+)?|@(?P<path>.+))$")


@dataclass(frozen=True)
class SlotSpec:
    kind: Literal["E", "N", "file"]
    size: int | None = None
    path: Path | None = None

    @property
    def is_grassmann(self) -> bool:
        return self.kind == "E"

    @property
    def is_unbounded(self) -> bool:
        return self.kind == "E" and self.size is None

    def __str__(self) -> str:
        if self.kind == "file":
            return f"@{self.path}"
        return f"{self.kind}{self.size if self.size is not None else ''}"


@dataclass(frozen=True)
class AlgebraSpec:
    slots: tuple[SlotSpec, ...]

    @property
    def all_grassmann(self) -> bool:
        return all(slot.is_grassmann for slot in self.slots)

    @property
    def grassmann_dims(self) -> tuple[int | None, ...]:
        """Slot capacities (None for E); only meaningful when every slot is Grassmann."""
        return tuple(slot.size for slot in self.slots)

    @property
    def has_unbounded(self) -> bool:
        return any(slot.is_unbounded for slot in self.slots)

    def __str__(self) -> str:
        return "*".join(str(slot) for slot in self.slots)


def parse_algebra_spec(text: str) -> AlgebraSpec:
    """
    Parses strings like ``"E*E2*E2"`` or ``"N4 * N3"``; whitespace is ignored.

    Raises:
        SpecParseError: On an unknown slot or an out-of-range size.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise SpecParseError("empty algebra spec")
    slots = []
    for token in compact.split("*"):
        match = _SLOT.match(token)
        if match is None:
            raise SpecParseError(f"unknown slot {token!r} in {text!r}")
        if match["path"]:
            slots.append(SlotSpec("file", path=Path(match["path"])))
            continue
        size = int(match["size"]) if match["size"] else None
        if match["kind"] == "N":
            if size is None or size < 3:
                raise SpecParseError(f"N_k needs k >= 3, got {token!r}")
            slots.append(SlotSpec("N", size))
        else:
            if size is not None and not 2 <= size <= MAX_GENERATORS:
                raise SpecParseError(f"E_r needs 2 <= r <= {MAX_GENERATORS}, got {token!r}")
            slots.append(SlotSpec("E", size))
    return AlgebraSpec(tuple(slots))


class StructureFile(BaseModel):
    basis: list[str]
    unit: int
    table: list[tuple[int, int, list[tuple[int, str | int]]]]


def load_structure_file(path: Path) -> FiniteAlgebra:
    """
    Loads ``{"basis": [...], "unit": i, "table": [[i, j, [[k, "num/den"], ...]], ...]}`` and
    validates associativity.

    Raises:
        ConstructionError: On malformed content or a failing validation.
    """
    try:
        model = StructureFile.model_validate_json(path.read_text())
    except (OSError, ValidationError) as e:
        raise ConstructionError(f"cannot read structure file {path}: {e}") from e
    dim = len(model.basis)
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j, entries in model.table:
        if not (0 <= i < dim and 0 <= j < dim):
            raise ConstructionError(f"table entry ({i}, {j}) outside the basis in {path}")
        row: dict[int, Fraction] = {}
        for k, coefficient in entries:
            if not 0 <= k < dim:
                raise ConstructionError(f"basis index {k} outside the basis in {path}")
            try:
                row[k] = row.get(k, 0) + Fraction(coefficient)
            except (ValueError, ZeroDivisionError) as e:
                raise ConstructionError(f"bad coefficient {coefficient!r} in {path}") from e
        table[(i, j)] = row
    algebra = FiniteAlgebra.from_table(path.stem, model.basis, model.unit, table)
    algebra.validate()
    logger.info(f"Loaded {dim}-dimensional algebra from {path}")
    return algebra


@cache
def _grassmann(r: int) -> FiniteAlgebra:
    return make_grassmann(r)


@cache
def _nk(k: int) -> FiniteAlgebra:
    return make_nk(k)


def slot_dimension(slot: SlotSpec, unbounded_rank: int | None = None) -> int | None:
    """Dimension of the materialized slot, None for E without a rank or for files."""
    if slot.kind == "E":
        rank = slot.size if slot.size is not None else unbounded_rank
        return None if rank is None else 1 << rank
    if slot.kind == "N":
        return 2 * slot.size - 2  # type: ignore[operator]
    return None


def materialize(spec: AlgebraSpec, *, max_dim: int | None = None, unbounded_rank: int | None = None) -> FiniteAlgebra:
    """
    Builds the finite algebra of a spec.

    Args:
        spec (AlgebraSpec): Parsed spec.
        max_dim (int | None): Dimension cap, defaults to ``MAX_ALGEBRA_DIM``.
        unbounded_rank (int | None): Number of generators standing in for each ``E`` slot.

    Returns:
        FiniteAlgebra: The tensor product of the slots.

    Raises:
        UnsupportedError: If the spec has an ``E`` slot and no ``unbounded_rank`` is given.
        SizeGuardError: If the dimension exceeds the cap.
    """
    limit = max_dim if max_dim is not None else get_settings().MAX_ALGEBRA_DIM
    if spec.has_unbounded and unbounded_rank is None:
        raise UnsupportedError(f"{spec} has an unbounded E slot and cannot be materialized")
    expected = 1
    for slot in spec.slots:
        dim = slot_dimension(slot, unbounded_rank)
        if dim is not None:
            expected *= dim
            if expected > limit:
                raise SizeGuardError(f"{spec} has dimension above the cap {limit}")
    factors = []
    for slot in spec.slots:
        if slot.kind == "E":
            factors.append(_grassmann(slot.size if slot.size is not None else unbounded_rank))  # type: ignore[arg-type]
        elif slot.kind == "N":
            factors.append(_nk(slot.size))  # type: ignore[arg-type]
        else:
            factors.append(load_structure_file(slot.path))  # type: ignore[arg-type]
    return tensor(factors, max_dim=limit)
