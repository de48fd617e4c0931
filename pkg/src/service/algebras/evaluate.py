import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Protocol, TypeVar

from service.core.errors import DimensionMismatchError
from service.freealg import MultilinearPoly, NcPoly

logger = logging.getLogger("service.algebras.evaluate")

T = TypeVar("T")


class AlgebraLike(Protocol[T]):
    """The operations polynomial evaluation needs; FiniteAlgebra and GrassmannTensor provide them."""

    def one(self) -> T: ...

    def zero(self) -> T: ...

    def add(self, a: T, b: T) -> T: ...

    def scale(self, a: T, scalar: Fraction | int) -> T: ...

    def mul(self, a: T, b: T) -> T: ...

    def owns(self, element: object) -> bool: ...


def evaluate(f: NcPoly | MultilinearPoly, args: Sequence[T], algebra: AlgebraLike[T]) -> T:
    """
    Substitutes ``args[i-1]`` for ``x_i`` and expands exactly.

    Products of shared word prefixes are computed once, which matters for multilinear
    polynomials whose n! words share most of their prefixes.

    Args:
        f (NcPoly | MultilinearPoly): Polynomial to evaluate.
        args (Sequence[T]): One element per variable, ``args[0]`` for ``x1``.
        algebra (AlgebraLike[T]): Algebra the arguments belong to.

    Returns:
        T: The value.

    Raises:
        DimensionMismatchError: If an argument belongs to another algebra or is missing.
    """
    poly = f.poly if isinstance(f, MultilinearPoly) else f
    variables = poly.variables()
    if variables and variables[-1] > len(args):
        raise DimensionMismatchError(f"polynomial uses x{variables[-1]} but only {len(args)} arguments were given")
    for position, arg in enumerate(args, start=1):
        if not algebra.owns(arg):
            raise DimensionMismatchError(f"argument {position} does not belong to {algebra!r}")
    prefixes: dict[tuple[int, ...], Any] = {(): algebra.one()}

    def prefix_value(word: tuple[int, ...]) -> T:
        if (value := prefixes.get(word)) is None:
            value = prefixes[word] = algebra.mul(prefix_value(word[:-1]), args[word[-1] - 1])
        return value

    result = algebra.zero()
    for word in sorted(poly.terms):
        result = algebra.add(result, algebra.scale(prefix_value(word), poly.terms[word]))
    return result
