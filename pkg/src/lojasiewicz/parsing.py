"""Exact parsing of polynomial expressions in ``x`` and ``y``.

Grammar (whitespace is ignored)::

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := ("+"|"-") factor | atom ("^" exponent)?    # "**" also works
    atom   := NUMBER | "x" | "y" | "(" expr ")"

Division is only allowed by a nonzero constant, and exponents must be
nonnegative integer literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import BivariatePolynomial

VARIABLES = {"x": BivariatePolynomial.x, "y": BivariatePolynomial.y}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str | None = None):
        self.message, self.line, self.column, self.source = message, line, column, source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


@dataclass
class _Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    column: int


def _tokenize(text: str, line: int) -> list:
    tokens, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(_Token("end", "", pos + 1))
            return tokens
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        col = m.start(m.lastindex) + 1
        kind = {1: "num", 2: "name", 3: "op"}[m.lastindex]
        tokens.append(_Token(kind, m.group(m.lastindex), col))
        pos = m.end()


class _Parser:
    def __init__(self, text: str, line: int):
        self.tokens = _tokenize(text, line)
        self.i = 0
        self.line = line

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok.column)

    def parse(self) -> BivariatePolynomial:
        if self.peek().kind == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self) -> BivariatePolynomial:
        value = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> BivariatePolynomial:
        value = self.factor()
        while self.peek().text in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op.text == "*":
                value = value * rhs
                continue
            if rhs.total_degree() > 0:
                self.error("division by a non-constant polynomial", op)
            c = rhs.constant_term()
            if not c:
                self.error("division by zero", op)
            value = value.scale(1 / Fraction(c))
        return value

    def factor(self) -> BivariatePolynomial:
        if self.peek().text in ("+", "-"):
            negate = self.take().text == "-"
            value = self.factor()
            return -value if negate else value
        base = self.atom()
        if self.peek().text in ("^", "**"):
            self.take()
            tok = self.peek()
            if tok.kind != "num":
                self.error("exponent must be a nonnegative integer literal")
            self.take()
            if "." in tok.text or self.peek().text == "/":
                self.error("fractional exponent", tok)
            return base ** int(tok.text)
        return base

    def atom(self) -> BivariatePolynomial:
        tok = self.take()
        if tok.kind == "num":
            return BivariatePolynomial.constant(Fraction(tok.text))
        if tok.kind == "name":
            if tok.text not in VARIABLES:
                self.error(f"unknown variable {tok.text!r}", tok)
            return VARIABLES[tok.text]()
        if tok.text == "(":
            value = self.expr()
            if self.peek().text != ")":
                self.error("expected ')'")
            self.take()
            return value
        if tok.kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, line: int = 1) -> BivariatePolynomial:
    """Parse one expression; ``line`` is only used in error positions."""
    return _Parser(text, line).parse()


@dataclass(frozen=True)
class InputDocument:
    """Polynomials read one per line; ``#`` starts a comment."""

    polynomials: tuple
    lines: tuple

    @classmethod
    def parse(cls, text: str, source: str | None = None) -> "InputDocument":
        polys, lines = [], []
        for number, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            if not body.strip():
                continue
            try:
                polys.append(parse_polynomial(body, number))
            except ParseError as err:
                raise ParseError(err.message, err.line, err.column, source) from None
            lines.append(number)
        return cls(tuple(polys), tuple(lines))

    @classmethod
    def read(cls, path) -> "InputDocument":
        path = Path(path)
        return cls.parse(path.read_text(), str(path))
