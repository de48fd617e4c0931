"""
Lower bounds for the codimensions of N_{2k} and N_{2k+1}.

γ is bounded below by dimensions of the modules generated by g_i^{(j)}·[x1, x2]^l, which are
polynomials in the half degree. Codimensions follow from the binomial transform
c_n = Σ binom(n, l) γ_l, whose closed form r(n)·2^n + s(n) is found by exact interpolation
and checked on held-out points.
"""
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Literal, TypeAlias

import sympy

from service.core.errors import DimensionMismatchError, InconsistentSystemError, UnsupportedError, VerificationError
from service.exactla import solve
from service.freealg import proper_dimension
from service.reptheory import Partition, did_gamma, e_tensor_lead

from .sequence import N, QPoly, QuasiPoly, binom_transform, catalan

logger = logging.getLogger("service.codim.bounds")

Parity: TypeAlias = Literal["odd", "even"]


@dataclass(frozen=True)
class _ModuleFormula:
    """dim = factor · T! / ((T - drop)! (T - a)(T - b) f1! f2!) for modules of degree T."""

    factor: int
    drop: int
    a: int
    b: int
    f1: int
    f2: int


def _formula(i: int, l: int) -> _ModuleFormula:
    if i == 1:
        return _ModuleFormula(3, 2 * l + 4, l, l + 3, l + 3, l)
    if i == 2:
        return _ModuleFormula(1, 2 * l + 4, l + 1, l + 2, l + 2, l + 1)
    if i == 3:
        return _ModuleFormula(2, 2 * l + 3, l, l + 2, l + 2, l)
    raise UnsupportedError(f"module families are indexed by 1, 2, 3, got {i}")


def module_degree(n: int, parity: Parity) -> int:
    if parity not in ("odd", "even"):
        raise UnsupportedError(f"parity must be odd or even, got {parity}")
    return 2 * n - 1 if parity == "odd" else 2 * n


def module_partition(i: int, l: int, degree: int) -> Partition:
    """Shape of the module generated by g_i^{(j)}·[x1, x2]^l in total degree ``degree``."""
    j = degree - 2 * l
    if i == 1:
        return Partition.of(l + 3, l + 1, *[1] * (j - 4))
    if i == 2:
        return Partition.of(l + 2, l + 2, *[1] * (j - 4))
    return Partition.of(l + 2, l + 1, *[1] * (j - 3))


def m_il_dim(i: int, l: int, n: int, parity: Parity) -> Fraction:
    """
    dim M_{i,l} in degree 2n − 1 (odd) or 2n (even), the module generated from degree
    j = 2n − 2l − 1 or 2n − 2l.

    Raises:
        UnsupportedError: If a factorial argument is negative or a linear factor vanishes.
    """
    if l < 0:
        raise UnsupportedError(f"l must be nonnegative, got {l}")
    formula = _formula(i, l)
    T = module_degree(n, parity)
    if T - formula.drop < 0 or T - formula.a <= 0 or T - formula.b <= 0:
        raise UnsupportedError(f"M_{i},{l} is not defined in degree {T}")
    return Fraction(
        formula.factor * factorial(T),
        factorial(T - formula.drop) * (T - formula.a) * (T - formula.b) * factorial(formula.f1) * factorial(formula.f2),
    )


def _symbolic_dim(i: int, l: int, parity: Parity) -> sympy.Expr:
    formula = _formula(i, l)
    T = 2 * N - 1 if parity == "odd" else 2 * N
    return formula.factor * sympy.ff(T, formula.drop) / ((T - formula.a) * (T - formula.b) * factorial(formula.f1) * factorial(formula.f2))


def bound_poly(k: int, parity: Parity) -> QPoly:
    """
    A_k (odd) or B_k (even) as a polynomial in the half degree n: the sum of dim M_{i,l} over
    i = 1, 2, 3 and l = 0..k−2, plus 1 for the standard polynomial in the even case.
    """
    if k < 2:
        raise UnsupportedError(f"bound polynomials need k >= 2, got {k}")
    if parity not in ("odd", "even"):
        raise UnsupportedError(f"parity must be odd or even, got {parity}")
    total = sum((_symbolic_dim(i, l, parity) for l in range(k - 1) for i in (1, 2, 3)), sympy.Integer(0))
    if parity == "even":
        total += 1
    poly = QPoly.from_sympy(total)
    logger.debug(f"{'A' if parity == 'odd' else 'B'}_{k}(n) = {poly}")
    return poly


@dataclass(frozen=True)
class BoundSpec:
    """
    A γ sequence given by explicit values below ``threshold`` and by ``tail(n)`` from there
    on, plus ``even_extra`` at even n.
    """

    k: int
    head_values: tuple[Fraction, ...]
    tail: QPoly
    label: str = ""
    even_extra: Fraction = Fraction(0)

    @property
    def threshold(self) -> int:
        return len(self.head_values)

    @property
    def fit_start(self) -> int:
        """First n where the closed form applies. Σ_{l even} binom(n, l) = 2^{n−1} fails at n = 0."""
        return 1 if self.even_extra else 0

    def value(self, n: int) -> Fraction:
        if n < self.threshold:
            return self.head_values[n]
        return self.tail(n) + (self.even_extra if n % 2 == 0 else 0)

    def codimension(self, n: int) -> Fraction:
        return binom_transform(self.value, n)


def bound_spec(k: int, parity: Parity, head: Sequence[int] | None = None) -> BoundSpec:
    """
    The γ lower bound for N_{2k}: dim Γ_n below 2k and A_k (odd) or B_k (even) from 2k on,
    the polynomial being read in the sequence index.

    Args:
        k (int): Half the nilpotency index, at least 2.
        parity (Parity): Which of the two bound polynomials forms the tail.
        head (Sequence[int] | None): Precomputed dim Γ_n for n < 2k.

    Raises:
        DimensionMismatchError: If ``head`` does not hold exactly 2k values.
    """
    tail = bound_poly(k, parity)
    values = [proper_dimension(n) for n in range(2 * k)] if head is None else list(head)
    if len(values) != 2 * k:
        raise DimensionMismatchError(f"expected {2 * k} head values, got {len(values)}")
    return BoundSpec(k, tuple(Fraction(value) for value in values), tail, label=f"{'A' if parity == 'odd' else 'B'}_{k}")


def _did_dimension(l: int) -> Callable[[int], int]:
    def dimension(n: int) -> int:
        return 1 - n if n < 2 else did_gamma(n, l).dimension

    return dimension


def did_spec(l: int, gamma: Callable[[int], int] | None = None) -> BoundSpec:
    """
    γ_n(E ⊗ E_{2l}) as a bound sequence.

    From n = 4l on every shape (a+2, 2^b, 1^c) exists and the dimensions are a polynomial of
    degree 2l plus the sign module at even n. The polynomial is interpolated on 2l + 1 points
    and confirmed on 2l + 2 more.

    Raises:
        VerificationError: If the dimensions leave the interpolated polynomial.
    """
    if l < 1:
        raise UnsupportedError(f"l must be at least 1, got {l}")
    threshold = 4 * l
    dims = gamma if gamma is not None else _did_dimension(l)

    def polynomial_part(n: int) -> int:
        return dims(n) - (1 if n % 2 == 0 else 0)

    tail = QPoly.interpolate([(n, polynomial_part(n)) for n in range(threshold, threshold + 2 * l + 1)])
    for n in range(threshold + 2 * l + 1, threshold + 4 * l + 3):
        if tail(n) != polynomial_part(n):
            raise VerificationError(f"gamma_{n}(E*E{2 * l}) = {dims(n)} leaves the interpolated polynomial {tail}")
    head = tuple(Fraction(dims(n)) for n in range(threshold))
    return BoundSpec(l, head, tail, label=f"E*E{2 * l}", even_extra=Fraction(1))


def closed_form(spec: BoundSpec) -> QuasiPoly:
    """
    The exact r(n)·2^n + s(n) equal to the binomial transform of the spec from
    ``spec.fit_start`` on.

    With d the tail degree, r has degree d and s degree below the threshold. The unknowns
    are fitted on max(2d + 4, unknowns + 1) points and checked on 2d + 4 further points.

    Raises:
        VerificationError: If the fit is inconsistent or fails on a held-out point.
    """
    d = max(spec.tail.degree, 0)
    s_size = spec.threshold
    fit_points = max(2 * d + 4, d + 1 + s_size + 1)
    held_out = 2 * d + 4
    points = range(spec.fit_start, spec.fit_start + fit_points + held_out)
    values = {n: spec.codimension(n) for n in points}
    fitted = points[:fit_points]
    matrix = [[Fraction(2**n * n**i) for i in range(d + 1)] + [Fraction(n**i) for i in range(s_size)] for n in fitted]
    try:
        solution = solve(matrix, [values[n] for n in fitted])
    except InconsistentSystemError:
        raise VerificationError(f"{spec.label}: codimensions are not of the form r(n)*2^n + s(n) with deg r = {d}")
    form = QuasiPoly(QPoly(tuple(solution[: d + 1])), QPoly(tuple(solution[d + 1 :])))
    for n in points[fit_points:]:
        if form(n) != values[n]:
            raise VerificationError(f"{spec.label}: closed form {form} fails at n = {n}")
    logger.info(f"{spec.label}: c_n = {form}")
    return form


def combined_bounds(k: int) -> tuple[Fraction, Fraction]:
    """
    Leading coefficients of the γ and codimension lower bounds for k ≥ 4, where the
    E ⊗ E_{2k−2} shapes and the g-family shapes are disjoint and their bounds add up.

    Returns:
        tuple[Fraction, Fraction]: ``(gamma_lead, codim_lead)`` with
        codim_lead · 2^{2k−2} = gamma_lead.
    """
    if k < 4:
        raise UnsupportedError(f"the combined bound needs k >= 4, got {k}")
    gamma_lead = e_tensor_lead(k - 1) + bound_poly(k, "odd").lead
    return gamma_lead, gamma_lead / 2 ** (2 * k - 2)


def catalan_lead(k: int) -> Fraction:
    """2^{2k−2} C_k / (2k−2)!, the expected leading coefficient of A_k and B_k."""
    return Fraction(2 ** (2 * k - 2) * catalan(k), factorial(2 * k - 2))


CodimRow: TypeAlias = tuple[int, Fraction, Fraction]


def codim_table(spec: BoundSpec, n_max: int, form: QuasiPoly | None = None) -> list[CodimRow]:
    """Rows ``(n, binomial transform, closed form)`` for n = fit_start..n_max."""
    form = form if form is not None else closed_form(spec)
    return [(n, spec.codimension(n), form(n)) for n in range(spec.fit_start, n_max + 1)]
