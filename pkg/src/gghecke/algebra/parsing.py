"""Text grammar shared by Coefficient and LaurentPoly.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := atom [('^'|'**') exponent]
    atom   := NUMBER | NAME | '(' expr ')'

NAME is ``v``, ``q`` (shorthand for v^2), ``X`` or ``X<k>``. Exponents are
integers, optionally signed or parenthesized: ``v^-2``, ``X1^(-3)``.
Division is only defined when the divisor is a unit of the target ring.
"""

import re
from fractions import Fraction
from typing import Any, Callable, List, NamedTuple

from ..errors import ParseError

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class Token(NamedTuple):
    type: str  # "num", "name", "op", "end"
    value: str
    where: int


def tokenize(source: str) -> List[Token]:
    text = source.replace("−", "-")
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(source, pos, "unexpected character")
        number, name, op = match.groups()
        start = match.start(match.lastindex)
        if number is not None:
            tokens.append(Token("num", number, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        else:
            tokens.append(Token("op", "^" if op == "**" else op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    """Recursive-descent parser evaluating into a caller-supplied ring.

    Args:
        number: builds a ring element from a rational constant
        symbol: builds a ring element from a NAME token (raises ParseError
            through ``fail`` for unknown names)
    """

    def __init__(self, number: Callable[[Fraction], Any], symbol: Callable[[str], Any]):
        self._number = number
        self._symbol = symbol
        self._tokens: List[Token] = []
        self._index = 0
        self._source = ""

    def parse(self, source: str) -> Any:
        self._source = source
        self._tokens = tokenize(source)
        self._index = 0
        if self._peek().type == "end":
            self.fail("empty expression")
        value = self._expr()
        if self._peek().type != "end":
            self.fail(f"unexpected token {self._peek().value!r}")
        return value

    def fail(self, message: str, token: Token = None):
        token = token or self._peek()
        raise ParseError(self._source, token.where, message)

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _accept(self, op: str) -> bool:
        token = self._peek()
        if token.type == "op" and token.value == op:
            self._index += 1
            return True
        return False

    def _expr(self) -> Any:
        negate = False
        if self._accept("-"):
            negate = True
        else:
            self._accept("+")
        value = self._term()
        if negate:
            value = -value
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> Any:
        value = self._unary()
        while True:
            if self._accept("*"):
                value = value * self._unary()
            elif self._accept("/"):
                token = self._peek()
                divisor = self._unary()
                try:
                    value = value * divisor ** -1
                except ArithmeticError as e:
                    self.fail(f"cannot divide by a non-unit ({e})", token)
            else:
                return value

    def _unary(self) -> Any:
        if self._accept("-"):
            return -self._unary()
        return self._power()

    def _power(self) -> Any:
        base_token = self._peek()
        base = self._atom()
        if self._accept("^"):
            exponent = self._exponent()
            try:
                return base ** exponent
            except ArithmeticError as e:
                self.fail(f"invalid power ({e})", base_token)
        return base

    def _exponent(self) -> int:
        parenthesized = self._accept("(")
        sign = 1
        if self._accept("-"):
            sign = -1
        else:
            self._accept("+")
        token = self._advance()
        if token.type != "num":
            self.fail("integer exponent expected", token)
        if parenthesized and not self._accept(")"):
            self.fail("')' expected")
        return sign * int(token.value)

    def _atom(self) -> Any:
        token = self._advance()
        if token.type == "num":
            return self._number(Fraction(int(token.value)))
        if token.type == "name":
            return self._symbol(token.value)
        if token.type == "op" and token.value == "(":
            value = self._expr()
            if not self._accept(")"):
                self.fail("')' expected")
            return value
        self.fail(f"unexpected token {token.value!r}", token)


def format_rational(value: Fraction) -> str:
    """Render a rational as ``3``, ``-1/2``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def join_signed_terms(terms: List[str]) -> str:
    """Join rendered terms into ``a + b - c`` form."""
    if not terms:
        return "0"
    pieces = [terms[0]]
    for term in terms[1:]:
        if term.startswith("-"):
            pieces.append(f" - {term[1:]}")
        else:
            pieces.append(f" + {term}")
    return "".join(pieces)


__all__ = [
    "Token",
    "tokenize",
    "ExpressionParser",
    "format_rational",
    "format_power",
    "join_signed_terms",
]
