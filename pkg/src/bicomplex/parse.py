"""Text syntax for bicomplex values.

Accepted forms, freely combined with ``+ - * / ^`` and parentheses::

    2+3i-1j+0.5k        basis form, k = ij
    [1+2i; 3-4i]        idempotent form e1*(1+2i) + e2*(3-4i)
    e1, e2              the idempotents

A number followed by a unit (``3i``, ``2.5 k``) is a product.
``4e1`` is the float 40; write ``4*e1`` for the idempotent multiple.
Whitespace is ignored.
"""
from __future__ import annotations

import re

from .core import E1, E2, Bicomplex, NotInvertible

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>e1|e2|[ijk])
  | (?P<op>[-+*/^()\[\];])
""", re.VERBOSE)

_UNITS = {
    "i": Bicomplex(1j, 0),
    "j": Bicomplex(0, 1),
    "k": Bicomplex(0, 1j),
    "e1": E1,
    "e2": E2,
}


class BicomplexSyntaxError(ValueError):
    """Malformed input; ``offset`` is the 0-based position of the problem."""

    def __init__(self, message, text, offset):
        self.text = text
        self.offset = offset
        self.message = message
        super().__init__(f"{message} at offset {offset}")

    def pretty(self):
        return f"{self.message} at offset {self.offset}\n  {self.text}\n  {' ' * self.offset}^"


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise BicomplexSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return BicomplexSyntaxError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {value!r}, found {what}", tok)
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[1] in ("*", "/"):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                val = val * rhs
            else:
                try:
                    val = val / rhs
                except NotInvertible as exc:
                    raise BicomplexSyntaxError(f"division by non-invertible {rhs}", self.text, tok[2]) from exc
        return val

    def unary(self):
        tok = self.peek()
        if tok[1] == "-":
            self.take()
            return -self.unary()
        if tok[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "num" or not tok[1].isdigit():
                raise self.error("exponent must be an integer literal", tok)
            n = int(tok[1])
            try:
                return base ** (-n if neg else n)
            except NotInvertible as exc:
                raise BicomplexSyntaxError(f"negative power of non-invertible {base}", self.text, tok[2]) from exc
        return base

    def atom(self):
        tok = self.take()
        kind, text, _ = tok
        if kind == "num":
            val = Bicomplex(float(text))
            nxt = self.peek()
            if nxt[0] == "name":
                self.take()
                val = val * _UNITS[nxt[1]]
            return val
        if kind == "name":
            return _UNITS[text]
        if text == "(":
            val = self.expr()
            self.expect(")")
            return val
        if text == "[":
            z1 = self._complex_part()
            self.expect(";")
            z2 = self._complex_part()
            self.expect("]")
            return Bicomplex.from_idempotent(z1, z2)
        what = "end of input" if kind == "end" else repr(text)
        raise self.error(f"expected a number, unit or '(', found {what}", tok)

    def _complex_part(self):
        start = self.peek()
        val = self.expr()
        if val.w != 0:
            raise self.error("idempotent components must be complex (no j or k terms)", start)
        return val.z


def parse_bicomplex(text):
    return _Parser(text).parse()


def parse_complex(text):
    val = parse_bicomplex(text)
    if val.w != 0:
        raise BicomplexSyntaxError("expected a complex number (no j or k terms)", text, 0)
    return val.z


__all__ = ["BicomplexSyntaxError", "parse_bicomplex", "parse_complex", "tokenize"]
