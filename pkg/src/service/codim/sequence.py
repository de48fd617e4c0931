"""Polynomials and quasi-polynomials with exact rational coefficients."""
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import sympy
from typing import TypeAlias

from service.core.errors import UnsupportedError

Gamma: TypeAlias = Callable[[int], Fraction | int]

N = sympy.Symbol("n", integer=True, nonnegative=True)


@dataclass(frozen=True)
class QPoly:
    """A polynomial in n, ``coefficients[i]`` belonging to n^i. Trailing zeros are stripped."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coefficients = [Fraction(c) for c in self.coefficients]
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, *coefficients: Fraction | int) -> "QPoly":
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def from_sympy(cls, expression: sympy.Expr, variable: sympy.Symbol = N) -> "QPoly":
        """
        Raises:
            UnsupportedError: If the expression is not a polynomial with rational coefficients.
        """
        expression = sympy.cancel(sympy.sympify(expression))
        if not expression.is_polynomial(variable):
            raise UnsupportedError(f"{expression} is not a polynomial in {variable}")
        poly = sympy.Poly(expression, variable)
        coefficients = []
        for c in reversed(poly.all_coeffs()):
            if not c.is_Rational:
                raise UnsupportedError(f"coefficient {c} is not rational")
            coefficients.append(Fraction(int(c.p), int(c.q)))
        return cls(tuple(coefficients))

    @classmethod
    def interpolate(cls, points: Sequence[tuple[int, Fraction | int]]) -> "QPoly":
        """The polynomial of least degree through the points."""
        data = [(x, sympy.Rational(Fraction(y).numerator, Fraction(y).denominator)) for x, y in points]
        return cls.from_sympy(sympy.interpolate(data, N))

    def to_sympy(self, variable: sympy.Symbol = N) -> sympy.Expr:
        return sum((sympy.Rational(c.numerator, c.denominator) * variable**i for i, c in enumerate(self.coefficients)), sympy.Integer(0))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def lead(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, n: int | Fraction) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * n + c
        return value

    def __add__(self, other: "QPoly") -> "QPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        padded = [self.coefficients[i] if i < len(self.coefficients) else 0 for i in range(size)]
        return QPoly(tuple(a + (other.coefficients[i] if i < len(other.coefficients) else 0) for i, a in enumerate(padded)))

    def __str__(self) -> str:
        return str(sympy.expand(self.to_sympy())) if self.coefficients else "0"

    def to_list(self) -> list[str]:
        return [str(c) for c in self.coefficients]


@dataclass(frozen=True)
class QuasiPoly:
    """The sequence r(n)·2^n + s(n)."""

    r: QPoly
    s: QPoly

    def __call__(self, n: int) -> Fraction:
        return self.r(n) * 2**n + self.s(n)

    def __str__(self) -> str:
        return f"2^n*({self.r}) + ({self.s})"


def catalan(k: int) -> int:
    if k < 0:
        raise UnsupportedError(f"no Catalan number of index {k}")
    return comb(2 * k, k) // (k + 1)


def binom_transform(gamma: Gamma, n: int) -> Fraction:
    """c_n = Σ_{l=0}^n binom(n, l) γ_l."""
    return sum((comb(n, l) * Fraction(gamma(l)) for l in range(n + 1)), Fraction(0))
