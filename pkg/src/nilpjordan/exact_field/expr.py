"""Parser for scalar literals.

Grammar (whitespace-insensitive)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" ["-"] INTEGER)?
    atom     := INTEGER | "z" | "t" | "(" expr ")"

``z`` is zeta_m for the conductor in force and ``t`` the transcendental.
"""

import re

from ..errors import DivisionByZero, ParseError
from .scalars import CycloNumber, field_pow, t_variable

_TOKEN = re.compile(r"\s*(?:(\d+)|([zt])|([-+*/^()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(1, col, f"unexpected character {text[col - 1]!r}")
        start = match.start(match.lastindex) + 1
        tokens.append((match.group(match.lastindex), start))
        pos = match.end()
    tokens.append(("", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, conductor, allow_t):
        self.tokens = _tokenize(text)
        self.i = 0
        self.m = conductor
        self.allow_t = allow_t

    def peek(self):
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        raise ParseError(1, self.tokens[self.i][1], message)

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op, col = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError(1, col, "division by zero")
                value = value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            _, col = self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok, _ = self.take()
            if not tok.isdigit():
                raise ParseError(1, col, "exponent must be an integer literal")
            try:
                return field_pow(base, sign * int(tok))
            except DivisionByZero:
                raise ParseError(1, col, "negative power of zero") from None
        return base

    def atom(self):
        tok, col = self.tokens[self.i]
        if tok.isdigit():
            self.take()
            return CycloNumber.from_rational(self.m, int(tok))
        if tok == "z":
            self.take()
            return CycloNumber.zeta(self.m)
        if tok == "t":
            if not self.allow_t:
                self.fail("'t' is not allowed here")
            self.take()
            return t_variable(self.m)
        if tok == "(":
            self.take()
            value = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return value
        self.fail("expected a number, 'z', 't' or '('" if tok else "unexpected end of expression")


def parse_scalar(text, conductor, allow_t=True):
    """Parse a scalar literal into a CycloNumber or RationalFunction.

    Raises ParseError with a 1-based column relative to ``text``.
    """
    parser = _Parser(text, conductor, allow_t)
    value = parser.expr()
    if parser.peek() != "":
        parser.fail(f"unexpected {parser.peek()!r}")
    return value
