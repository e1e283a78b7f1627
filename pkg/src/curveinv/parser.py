"""Recursive-descent parser for polynomial and series expressions.

Grammar (implicit multiplication is rejected; no unary minus outside
integer literals):

    expr        := term (('+' | '-') term)*
    term        := factor ('*' factor)*
    factor      := base ('^' nat)?
    base        := rationalLit | 'i' | 'x' | 'y' | 't' | '(' expr ')'
    rationalLit := int | '(' int '/' posint ')'

Polynomials use the variables x, y; series use t.  ``parse(print(v)) == v``
for the canonical printers in poly.py and series.py.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError
from .gaussian import GaussianRational
from .poly import BiPoly
from .series import TruncSeries


class _Token(NamedTuple):
    kind: str   # NUM, NAME, OP, EOF
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    k = 0
    while k < len(text):
        ch = text[k]
        if ch == "\n":
            line += 1
            col = 1
            k += 1
            continue
        if ch.isspace():
            col += 1
            k += 1
            continue
        if ch.isdigit():
            start = k
            while k < len(text) and text[k].isdigit():
                k += 1
            tokens.append(_Token("NUM", text[start:k], line, col))
            col += k - start
            continue
        if ch.isalpha():
            start = k
            while k < len(text) and text[k].isalnum():
                k += 1
            tokens.append(_Token("NAME", text[start:k], line, col))
            col += k - start
            continue
        if ch in "+-*^/()":
            tokens.append(_Token("OP", ch, line, col))
            k += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    """Evaluates the expression directly into the target algebra."""

    def __init__(self, text: str, variables: dict[str, object], algebra: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables
        self.algebra = algebra  # "poly" or "series"

    # token plumbing ------------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.line, tok.col)
        return self.advance()

    # helpers -------------------------------------------------------------

    def _const(self, value: Fraction):
        c = GaussianRational(value)
        return BiPoly.const(c) if self.algebra == "poly" else TruncSeries.const(c)

    def _imaginary(self):
        c = GaussianRational(0, 1)
        return BiPoly.const(c) if self.algebra == "poly" else TruncSeries.const(c)

    # grammar -------------------------------------------------------------

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.base()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.advance()
            num = self.peek()
            if num.kind != "NUM":
                raise ParseError("expected a natural number exponent", num.line, num.col)
            self.advance()
            value = value ** int(num.text)
        return value

    def base(self):
        tok = self.peek()
        if tok.kind == "NUM":
            self.advance()
            return self._const(Fraction(int(tok.text)))
        if tok.kind == "OP" and tok.text == "-":
            # negative integer literal: '-' digits
            self.advance()
            num = self.peek()
            if num.kind != "NUM":
                raise ParseError("expected digits after '-'", num.line, num.col)
            self.advance()
            return self._const(Fraction(-int(num.text)))
        if tok.kind == "NAME":
            self.advance()
            if tok.text == "i":
                return self._imaginary()
            if tok.text in self.variables:
                return self.variables[tok.text]
            raise ParseError(f"unknown variable {tok.text}", tok.line, tok.col)
        if tok.kind == "OP" and tok.text == "(":
            lit = self._try_fraction_literal()
            if lit is not None:
                return lit
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.col)

    def _try_fraction_literal(self):
        """Match the full pattern '(' ['-'] NUM '/' NUM ')', else roll back."""
        saved = self.pos
        try:
            self.expect_op("(")
            sign = 1
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "-":
                self.advance()
                sign = -1
            num = self.peek()
            if num.kind != "NUM":
                raise ParseError("not a fraction", num.line, num.col)
            self.advance()
            tok = self.peek()
            if tok.kind != "OP" or tok.text != "/":
                raise ParseError("not a fraction", tok.line, tok.col)
            self.advance()
            den = self.peek()
            if den.kind != "NUM" or int(den.text) == 0:
                raise ParseError("expected a positive denominator", den.line, den.col)
            self.advance()
            self.expect_op(")")
        except ParseError:
            self.pos = saved
            return None
        return self._const(Fraction(sign * int(num.text), int(den.text)))


def parse_poly(text: str) -> BiPoly:
    """Parse a polynomial in x and y over Q(i)."""
    variables = {"x": BiPoly.variable("x"), "y": BiPoly.variable("y")}
    return _Parser(text, variables, "poly").parse()


def parse_series(text: str) -> TruncSeries:
    """Parse a polynomial series in t over Q(i); the result is exact."""
    variables = {"t": TruncSeries.monomial(1)}
    return _Parser(text, variables, "series").parse()
