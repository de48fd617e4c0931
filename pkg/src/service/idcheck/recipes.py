"""
Explicit substitutions proving that concrete polynomials are not identities.

Every recipe returns the polynomial, the algebra, the argument tuple and, when a closed
expression is known, the expected value. The g-family substitutions have no closed value;
only nonvanishing of the evaluation is claimed for them.
"""
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from math import factorial

from service.algebras import AlgebraSpec, evaluate, parse_algebra_spec
from service.core.errors import DimensionMismatchError, UnsupportedError
from service.freealg import NcPoly, commutator, commutator_of_variables, make_g, x
from service.grassmann import GrassmannTensor, TensorElem, monomial

logger = logging.getLogger("service.idcheck.recipes")


@dataclass(frozen=True)
class RecipeInstance:
    name: str
    poly: NcPoly
    spec: AlgebraSpec
    algebra: GrassmannTensor
    arguments: tuple[TensorElem, ...]
    expected: TensorElem | None = None


def _grassmann_algebra(spec: AlgebraSpec) -> GrassmannTensor:
    if not spec.all_grassmann:
        raise UnsupportedError(f"substitution witnesses need Grassmann slots, got {spec}")
    return GrassmannTensor(spec.grassmann_dims)


def product_nonidentity_witness(f: NcPoly, spec: AlgebraSpec, arguments: Sequence[TensorElem]) -> TensorElem:
    """
    Evaluates a possibly non-multilinear polynomial on an explicit substitution.

    Args:
        f (NcPoly): The polynomial.
        spec (AlgebraSpec): Grassmann tensor product the arguments live in.
        arguments (Sequence[TensorElem]): ``arguments[i-1]`` replaces ``x_i``.

    Returns:
        TensorElem: The exact value; the caller decides what nonvanishing means.

    Raises:
        DimensionMismatchError: If the number of arguments differs from the variables of f
            or an argument lives in another algebra.
    """
    algebra = _grassmann_algebra(spec)
    variables = f.variables()
    arity = variables[-1] if variables else 0
    if arity != len(arguments):
        raise DimensionMismatchError(f"{f} takes {arity} arguments, the substitution has {len(arguments)}")
    return evaluate(f, arguments, algebra)


def lie_equal(k: int) -> RecipeInstance:
    """``[e1⊗1, e2⊗f1, ..., e_{2k}⊗f_{2k-1}, 1⊗f_{2k}]`` on E_{2k} ⊗ E_{2k}, equal to 2^{2k} e1..e_{2k} ⊗ f1..f_{2k}."""
    if k < 1:
        raise UnsupportedError("lie-equal needs k >= 1")
    r = 2 * k
    spec = parse_algebra_spec(f"E{r}*E{r}")
    algebra = _grassmann_algebra(spec)
    args = [algebra.pure(monomial([1], r), monomial([], r))]
    args += [algebra.pure(monomial([i], r), monomial([i - 1], r)) for i in range(2, r + 1)]
    args.append(algebra.pure(monomial([], r), monomial([r], r)))
    expected = algebra.scale(algebra.pure(monomial(range(1, r + 1), r), monomial(range(1, r + 1), r)), 1 << r)
    return RecipeInstance("lie-equal", commutator_of_variables(*range(1, r + 2)), spec, algebra, tuple(args), expected)


def grassmann_chain(k: int) -> RecipeInstance:
    """
    ``[a_1, ..., a_{2k+2}]`` on E ⊗ E_2^{⊗k} with a_1 = e1, a_{2i} = e_{2i}⊗f1 and
    a_{2i+1} = e_{2i+1}⊗f2 in the i-th E_2 slot, a_{2k+2} = e_{2k+2}.
    """
    if k < 1:
        raise UnsupportedError("grassmann-chain needs k >= 1")
    spec = parse_algebra_spec("*".join(["E"] + ["E2"] * k))
    algebra = _grassmann_algebra(spec)

    def element(e_index: int, slot: int | None = None, f_index: int | None = None) -> TensorElem:
        factors = [monomial([e_index], None)] + [monomial([], 2)] * k
        if slot is not None:
            factors[slot] = monomial([f_index], 2)  # type: ignore[list-item]
        return algebra.pure(*factors)

    args = [element(1)]
    for i in range(1, k + 1):
        args += [element(2 * i, i, 1), element(2 * i + 1, i, 2)]
    args.append(element(2 * k + 2))
    expected = algebra.scale(algebra.pure(monomial(range(1, 2 * k + 3), None), *[monomial([1, 2], 2)] * k), 1 << (2 * k + 1))
    return RecipeInstance("grassmann-chain", commutator_of_variables(*range(1, 2 * k + 3)), spec, algebra, tuple(args), expected)


def square_commutator(p: int) -> RecipeInstance:
    """``[x1, x2]^{p-1}`` on E_2^{⊗(p-1)} with x_s the sum of e_s over all slots, equal to 2^{p-1}(p-1)! (e1e2)^{⊗(p-1)}."""
    if p < 2:
        raise UnsupportedError("square-commutator needs p >= 2")
    spec = parse_algebra_spec("*".join(["E2"] * (p - 1)))
    algebra = _grassmann_algebra(spec)
    args = []
    for s in (1, 2):
        total = algebra.zero()
        for slot in range(p - 1):
            total = algebra.add(total, algebra.generator(slot, s))
        args.append(total)
    expected = algebra.scale(algebra.pure(*[monomial([1, 2], 2)] * (p - 1)), (1 << (p - 1)) * factorial(p - 1))
    return RecipeInstance("square-commutator", commutator(x(1), x(2)) ** (p - 1), spec, algebra, tuple(args), expected)


def _g_table(i: int, degree: int) -> str:
    if degree % 2:
        return "C" if i == 2 else "A"
    return {1: "A", 2: "B", 3: "D"}[i]


def g_family(i: int, degree: int, k: int) -> RecipeInstance:
    """
    ``g_i^{(degree)} · [x1, x2]^{k-2}`` on E ⊗ E_2 ⊗ E_2^{⊗(k-2)}.

    Slot 0 is E with generators e, the E_2 slots have generators g1, g2; slot 1 carries
    the mixed terms and the remaining ``k - 2`` slots add g1 to x1 and g2 to x2.

    * A (g_1 and odd g_3): x1 = e1⊗g1 + e2⊗g2 + e3, x2 = e4, x_i = e_{i+2}
    * B (even g_2): x1 = e1 + g1 over all E_2 slots, x2 = e2 + g2 likewise, x_i = e_i
    * C (odd g_2): x1 = e1⊗g1 + e3, x2 = e2 + 1⊗g2, x_i = e_{i+1}
    * D (even g_3): x1 = e1⊗g1 + e3, x2 = e2, x_i = e_{i+1}
    """
    if k < 2:
        raise UnsupportedError("g-family substitutions need k >= 2")
    g = make_g(i, degree)
    poly = g * commutator(x(1), x(2)) ** (k - 2)
    spec = parse_algebra_spec("*".join(["E"] + ["E2"] * (k - 1)))
    algebra = _grassmann_algebra(spec)
    table = _g_table(i, degree)

    def e(*indices: int) -> TensorElem:
        return algebra.embed(0, monomial(indices, None))

    def mixed(e_index: int, g_index: int) -> TensorElem:
        return algebra.mul(e(e_index), algebra.generator(1, g_index))

    def spread(g_index: int, first_slot: int) -> TensorElem:
        total = algebra.zero()
        for slot in range(first_slot, k):
            total = algebra.add(total, algebra.generator(slot, g_index))
        return total

    def add(*parts: TensorElem) -> TensorElem:
        return _sum(algebra, parts)

    if table == "A":
        x1 = add(mixed(1, 1), mixed(2, 2), e(3), spread(1, 2))
        x2 = add(e(4), spread(2, 2))
        shift = 2
    elif table == "B":
        x1 = add(e(1), spread(1, 1))
        x2 = add(e(2), spread(2, 1))
        shift = 0
    elif table == "C":
        x1 = add(mixed(1, 1), e(3), spread(1, 2))
        x2 = add(e(2), algebra.generator(1, 2), spread(2, 2))
        shift = 1
    else:
        x1 = add(mixed(1, 1), e(3), spread(1, 2))
        x2 = add(e(2), spread(2, 2))
        shift = 1
    arity = g.variables()[-1]
    args = (x1, x2, *(e(index + shift) for index in range(3, arity + 1)))
    return RecipeInstance(f"g-family-{table}", poly, spec, algebra, args)


def _sum(algebra: GrassmannTensor, parts: Sequence[TensorElem]) -> TensorElem:
    total = algebra.zero()
    for part in parts:
        total = algebra.add(total, part)
    return total


RECIPES: dict[str, Callable[..., RecipeInstance]] = {
    "lie-equal": lie_equal,
    "grassmann-chain": grassmann_chain,
    "square-commutator": square_commutator,
    "g-family": g_family,
}


def run_recipe(recipe: RecipeInstance) -> TensorElem:
    value = product_nonidentity_witness(recipe.poly, recipe.spec, recipe.arguments)
    logger.info(f"{recipe.name} on {recipe.spec}: {'nonzero' if not value.is_zero() else 'zero'}")
    return value
