"""
Parser for polynomial literals.

Grammar (whitespace ignored)::

    expr     := ["-"] term (("+" | "-") term)*
    term     := factor (["*"] factor)*
    factor   := atom ["^" INT]
    atom     := NUMBER ["/" INT] | "x" INT | "[" expr ("," expr)+ "]" | "(" expr ")"

Brackets are left-normed commutators, juxtaposition is multiplication.
"""
import logging
import re
from fractions import Fraction

from service.core.errors import PolyParseError

from .poly import NcPoly, long_commutator

logger = logging.getLogger("service.freealg.parser")

_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<index>\d+))|(?P<number>\d+)|(?P<op>[-+*/^\[\](),]))")
MAX_VARIABLE = 99


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[tuple[str, str]] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            match = _TOKEN.match(stripped, position)
            if match is None:
                raise PolyParseError(f"unexpected character {stripped[position:].lstrip()[:1]!r} at offset {position} in {text!r}")
            if match["var"]:
                self.tokens.append(("var", match["index"]))
            elif match["number"]:
                self.tokens.append(("number", match["number"]))
            else:
                self.tokens.append(("op", match["op"]))
            position = match.end()
        self.position = 0

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _next(self) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            raise PolyParseError(f"unexpected end of input in {self.text!r}")
        self.position += 1
        return token

    def _expect(self, op: str) -> None:
        token = self._next()
        if token != ("op", op):
            raise PolyParseError(f"expected {op!r}, got {token[1]!r} in {self.text!r}")

    def _at_op(self, *ops: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == "op" and token[1] in ops

    def parse(self) -> NcPoly:
        if not self.tokens:
            raise PolyParseError("empty polynomial literal")
        result = self._expr()
        if self._peek() is not None:
            raise PolyParseError(f"trailing input {self._peek()[1]!r} in {self.text!r}")  # type: ignore[index]
        return result

    def _expr(self) -> NcPoly:
        negative = False
        if self._at_op("-"):
            self._next()
            negative = True
        elif self._at_op("+"):
            self._next()
        result = self._term()
        if negative:
            result = -result
        while self._at_op("+", "-"):
            sign = self._next()[1]
            term = self._term()
            result = result + term if sign == "+" else result - term
        return result

    def _starts_atom(self) -> bool:
        token = self._peek()
        return token is not None and (token[0] in ("var", "number") or token[1] in ("[", "("))

    def _term(self) -> NcPoly:
        result = self._factor()
        while True:
            if self._at_op("*"):
                self._next()
            elif not self._starts_atom():
                return result
            result = result * self._factor()

    def _factor(self) -> NcPoly:
        base = self._atom()
        if self._at_op("^"):
            self._next()
            kind, value = self._next()
            if kind != "number":
                raise PolyParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            base = base ** int(value)
        return base

    def _atom(self) -> NcPoly:
        kind, value = self._next()
        if kind == "number":
            numerator = int(value)
            if self._at_op("/"):
                self._next()
                kind, denominator = self._next()
                if kind != "number" or int(denominator) == 0:
                    raise PolyParseError(f"bad rational coefficient in {self.text!r}")
                return NcPoly.const(Fraction(numerator, int(denominator)))
            return NcPoly.const(numerator)
        if kind == "var":
            index = int(value)
            if not 1 <= index <= MAX_VARIABLE:
                raise PolyParseError(f"variable x{index} outside x1..x{MAX_VARIABLE}")
            return NcPoly.var(index)
        if value == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        if value == "[":
            entries = [self._expr()]
            while self._at_op(","):
                self._next()
                entries.append(self._expr())
            self._expect("]")
            if len(entries) < 2:
                raise PolyParseError(f"commutator needs at least two entries in {self.text!r}")
            return long_commutator(entries)
        raise PolyParseError(f"unexpected {value!r} in {self.text!r}")


def parse_poly(text: str) -> NcPoly:
    """
    Parses a polynomial literal such as ``"[x1,x2]^2 - 1/2*x3 x1"``.

    Raises:
        PolyParseError: On malformed input.
    """
    poly = _Parser(text).parse()
    logger.debug(f"Parsed {text!r} into {len(poly.terms)} terms")
    return poly
