"""Identity checking by direct evaluation on basis tuples of a FiniteAlgebra."""
import logging
from collections.abc import Iterator, Sequence
from typing import Literal, TypeAlias

from service.algebras import AlgebraElem, FiniteAlgebra, evaluate
from service.core.errors import SizeGuardError, UnsupportedError, VerificationError
from service.exactla import EchelonBasis
from service.freealg import MultilinearPoly, NcPoly, commutator_of_variables
from settings import get_settings

from .parity import as_multilinear
from .verdict import IdentityVerdict, Witness

logger = logging.getLogger("service.idcheck.brute")

Strategy: TypeAlias = Literal["auto", "tuples", "commutator-span"]


def is_long_commutator(f: MultilinearPoly) -> bool:
    return f.degree >= 2 and f.poly == commutator_of_variables(*range(1, f.degree + 1))


def _disjoint(accumulated: list[int], support: tuple[int | None, ...]) -> bool:
    return all(m is None or not (acc & m) for acc, m in zip(accumulated, support, strict=True))


def basis_tuples(algebra: FiniteAlgebra, n: int, unit_allowed: Sequence[bool], *, max_tuples: int | None = None) -> Iterator[tuple[int, ...]]:
    """
    Basis index tuples of length n on which a multilinear polynomial can be nonzero.

    For Grassmann-built algebras only tuples with pairwise disjoint supports in every slot
    are produced. The unit is skipped in position i unless ``unit_allowed[i]``.

    Raises:
        SizeGuardError: If dim^n exceeds ``max_tuples``.
    """
    limit = max_tuples if max_tuples is not None else get_settings().MAX_BRUTE_TUPLES
    if algebra.dim**n > limit:
        raise SizeGuardError(f"{algebra.dim}^{n} basis tuples exceed the guard {limit}")
    supports = [algebra.grassmann_supports(b) for b in range(algebra.dim)] if algebra.is_grassmann_built else None
    slots = len(supports[0]) if supports else 0  # type: ignore[arg-type]
    chosen: list[int] = []
    accumulated = [0] * slots

    def descend(position: int) -> Iterator[tuple[int, ...]]:
        if position == n:
            yield tuple(chosen)
            return
        for b in range(algebra.dim):
            if b == algebra.unit_index and not unit_allowed[position]:
                continue
            saved = None
            if supports is not None:
                support = supports[b]
                if not _disjoint(accumulated, support):  # type: ignore[arg-type]
                    continue
                saved = list(accumulated)
                for slot, m in enumerate(support):  # type: ignore[arg-type]
                    if m is not None:
                        accumulated[slot] |= m
            chosen.append(b)
            yield from descend(position + 1)
            chosen.pop()
            if saved is not None:
                accumulated[:] = saved

    return descend(0)


def _check_tuples(f: MultilinearPoly, algebra: FiniteAlgebra, max_tuples: int) -> IdentityVerdict:
    unit_allowed = [not f.poly.substitute_unit(i).is_zero() for i in range(1, f.degree + 1)]
    leaves = 0
    witness = None
    for chosen in basis_tuples(algebra, f.degree, unit_allowed, max_tuples=max_tuples):
        leaves += 1
        args = [algebra.basis(b) for b in chosen]
        value = evaluate(f, args, algebra)
        if not value.is_zero():
            witness = Witness(tuple(args), value, basis_indices=chosen)
            break
    logger.debug(f"Evaluated {leaves} basis tuples of {algebra.name}")
    if witness is None:
        return IdentityVerdict(True, method="tuples")
    return IdentityVerdict(False, witness, method="tuples")


def _check_commutator_span(f: MultilinearPoly, algebra: FiniteAlgebra) -> IdentityVerdict:
    """
    Span recursion V_1 = A, V_{k+1} = span [V_k, A] for f = [x_1, ..., x_q].

    Each level keeps independent generators together with the basis tuple producing them,
    so a surviving generator at level q is a witness.
    """
    letters = [b for b in range(algebra.dim) if b != algebra.unit_index]
    generators: list[tuple[tuple[int, ...], AlgebraElem]] = [((b,), algebra.basis(b)) for b in letters]
    for level in range(2, f.degree + 1):
        echelon = EchelonBasis()
        next_generators = []
        for indices, g in generators:
            for b in letters:
                value = algebra.commutator(g, algebra.basis(b))
                if not value.is_zero() and echelon.add(value.terms):
                    next_generators.append(((*indices, b), value))
        logger.debug(f"dim [A, ..., A] with {level} entries in {algebra.name}: {len(next_generators)}")
        if not next_generators:
            return IdentityVerdict(True, method="commutator-span")
        generators = next_generators
    indices, value = generators[0]
    args = tuple(algebra.basis(b) for b in indices)
    if evaluate(f, args, algebra) != value:
        raise VerificationError(f"commutator witness {indices} does not re-evaluate in {algebra.name}")
    return IdentityVerdict(False, Witness(args, value, basis_indices=indices), method="commutator-span")


def brute_check(f: NcPoly | MultilinearPoly, algebra: FiniteAlgebra, *, strategy: Strategy = "auto", max_tuples: int | None = None) -> IdentityVerdict:
    """
    Decides whether a multilinear polynomial is an identity of a finite algebra.

    ``tuples`` evaluates f on every basis tuple, skipping tuples with overlapping Grassmann
    supports and unit entries in variables whose substitution by 1 kills f. ``commutator-span``
    only applies to ``[x_1, ..., x_q]``; ``auto`` uses it whenever it applies.

    Raises:
        SizeGuardError: If dim^n exceeds ``max_tuples`` (tuples strategy).
        UnsupportedError: If the polynomial is not multilinear, or the span strategy is
            requested for something other than a long commutator.
    """
    f = as_multilinear(f)
    limit = max_tuples if max_tuples is not None else get_settings().MAX_BRUTE_TUPLES
    if strategy == "auto":
        strategy = "commutator-span" if is_long_commutator(f) else "tuples"
    if strategy == "commutator-span":
        if not is_long_commutator(f):
            raise UnsupportedError("the commutator-span strategy needs f = [x1, ..., xq]")
        verdict = _check_commutator_span(f, algebra)
    else:
        verdict = _check_tuples(f, algebra, limit)
    logger.info(f"Degree {f.degree} polynomial on {algebra.name}: {'identity' if verdict.is_identity else 'not an identity'} ({verdict.method})")
    return verdict
