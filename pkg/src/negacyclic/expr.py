"""Text syntax for polynomials over F_p and over R.

Grammar (whitespace ignored)::

    poly   := sign? term (("+" | "-") term)*
    term   := factor ("*"? factor)*
    factor := atom ("^" INT)?
    atom   := INT | "x" | "(" poly ")"

Juxtaposition multiplies, so ``3x^2``, ``2(x+1)^3`` and ``(x+1)^2(x+4)``
all parse. Integer coefficients are reduced mod p.

An element of R[x] is written as four such polynomials ``f0;f1;f2;f3``
meaning ``f0 + u f1 + v f2 + uv f3``; missing trailing parts are zero.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .fieldpoly import FpPoly, PrimeField, format_poly

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\+)|(-)|(\*)|(\()|(\)))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    kinds = ("int", "x", "^", "+", "-", "*", "(", ")")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        for kind, group in zip(kinds, m.groups()):
            if group is not None:
                tokens.append((kind, group, m.start(m.lastindex)))
                break
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: PrimeField):
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def poly(self) -> FpPoly:
        neg = False
        if self.peek()[0] in "+-":
            neg = self.take(self.peek()[0])[0] == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> FpPoly:
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take("*")
            elif kind not in ("int", "x", "("):
                return acc
            acc = acc * self.factor()

    def factor(self) -> FpPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^")
            e = int(self.take("int")[1])
            base = base**e
        return base

    def atom(self) -> FpPoly:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take("int")
            return FpPoly((int(value),), self.field)
        if kind == "x":
            self.take("x")
            return self.field.x()
        if kind == "(":
            self.take("(")
            inner = self.poly()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", pos)


def parse_poly(text: str, field: PrimeField | int) -> FpPoly:
    """Parse a polynomial string over F_p."""
    if isinstance(field, int):
        field = PrimeField(field)
    parser = _Parser(text, field)
    if parser.peek()[0] == "end":
        raise ParseError("empty polynomial", 0)
    out = parser.poly()
    parser.take("end")
    return out


def parse_components(text: str, field: PrimeField | int) -> tuple[FpPoly, FpPoly, FpPoly, FpPoly]:
    """Parse ``f0;f1;f2;f3`` into four polynomials, defaulting missing parts to 0."""
    if isinstance(field, int):
        field = PrimeField(field)
    parts = text.split(";")
    if len(parts) > 4:
        raise ParseError("at most four ';'-separated parts", len(";".join(parts[:4])))
    out = []
    offset = 0
    for part in parts:
        try:
            out.append(parse_poly(part, field) if part.strip() else field.zero())
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at position", 1)[0], offset + exc.position) from None
        offset += len(part) + 1
    while len(out) < 4:
        out.append(field.zero())
    return tuple(out)


def format_components(parts) -> str:
    return ";".join(format_poly(f) for f in parts)
