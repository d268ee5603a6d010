"""Text syntax for scalars, polynomials and differential operators.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := ('+' | '-')* power (('*' | <juxtaposition>) power | '/' power)*
    power  := atom (('^' | '**') INTEGER)?
    atom   := NUMBER | 'i' | VARIABLE | 'D' DIGITS | '(' expr ')'

``NUMBER`` is a decimal or a rational literal such as ``3/4`` with an
optional ``i`` suffix, so ``1/2i`` is one half times ``i``. Division is only
allowed by constants. ``Dk`` is the k-th derivative (bare ``D`` is the
first); in an operator the derivative symbol commutes with ``x``, so
``D x`` is read as ``x D``.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .scalar import ONE, ZERO, ExactComplex, I

_NUMBER = re.compile(r"(\d+(?:\.\d*)?|\.\d+)(?:/(\d+))?(i?)")
_INTEGER = re.compile(r"\d+")
_DERIV = re.compile(r"D(\d*)")


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind, self.value, self.pos = kind, value, pos

    def __repr__(self):
        return f"{self.kind}:{self.value!r}@{self.pos}"


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        prev = tokens[-1].kind if tokens else None
        if prev == "^":
            m = _INTEGER.match(text, pos)
            if not m:
                raise ParseError("expected a non-negative integer exponent", text, pos)
            if text.startswith(".", m.end()):
                raise ParseError("exponents must be integers", text, m.end())
            tokens.append(_Token("int", int(m.group()), pos))
            pos = m.end()
            continue
        if ch.isdigit() or (ch == "." and pos + 1 < n and text[pos + 1].isdigit()):
            m = _NUMBER.match(text, pos)
            num = Fraction(m.group(1))
            if m.group(2) is not None:
                den = int(m.group(2))
                if den == 0:
                    raise ParseError("zero denominator in literal", text, pos)
                num /= den
            value = ExactComplex(0, num) if m.group(3) else ExactComplex(num)
            tokens.append(_Token("num", value, pos))
            pos = m.end()
            continue
        if ch == "D":
            m = _DERIV.match(text, pos)
            order = int(m.group(1)) if m.group(1) else 1
            tokens.append(_Token("var", ("D", order), pos))
            pos = m.end()
            continue
        if ch.isalpha():
            if pos + 1 < n and text[pos + 1].isalpha():
                m = re.compile(r"[A-Za-z]+").match(text, pos)
                raise ParseError(f"unknown identifier {m.group()!r}", text, pos)
            if ch == "i":
                tokens.append(_Token("num", I, pos))
            else:
                tokens.append(_Token("var", (ch, 1), pos))
            pos += 1
            continue
        if text.startswith("**", pos):
            tokens.append(_Token("^", "**", pos))
            pos += 2
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, pos)
    tokens.append(_Token("end", None, n))
    return tokens


# Sparse multivariate polynomials: dict mapping exponent tuples to ExactComplex.

def _mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, ZERO) + ca * cb
    return {e: c for e, c in out.items() if not c.is_zero()}


def _add(a, b, sign=1):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, ZERO) + (c if sign > 0 else -c)
    return {e: c for e, c in out.items() if not c.is_zero()}


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.vars = variables
        self.tokens = _tokenize(text)
        self.i = 0
        self.zero_exp = (0,) * len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok.pos)

    def parse(self):
        if self.peek().kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            value = _add(value, self.term(), 1 if op == "+" else -1)
        return value

    def term(self):
        sign = 1
        while self.peek().kind in ("+", "-"):
            if self.take().kind == "-":
                sign = -sign
        value = self.power()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.take()
                value = _mul(value, self.power())
            elif kind == "/":
                tok = self.take()
                den = self.power()
                if set(den) - {self.zero_exp} or not den:
                    self.fail("division is only allowed by a non-zero constant", tok)
                d = den[self.zero_exp]
                value = {e: c / d for e, c in value.items()}
            elif kind in ("num", "var", "("):
                value = _mul(value, self.power())
            else:
                break
        if sign < 0:
            value = {e: -c for e, c in value.items()}
        return value

    def power(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            tok = self.take()
            if tok.kind != "int":
                self.fail("expected a non-negative integer exponent", tok)
            result = {self.zero_exp: ONE}
            for _ in range(tok.value):
                result = _mul(result, base)
            return result
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return {self.zero_exp: tok.value} if not tok.value.is_zero() else {}
        if tok.kind == "var":
            name, order = tok.value
            if name not in self.vars:
                allowed = ", ".join(self.vars)
                self.fail(f"unknown variable {name!r} (expected one of: {allowed})", tok)
            e = [0] * len(self.vars)
            e[self.vars.index(name)] = order
            return {tuple(e): ONE}
        if tok.kind == "(":
            value = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'")
            self.take()
            return value
        if tok.kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail("unexpected token", tok)


def _parse(text, variables):
    if not isinstance(text, str):
        raise TypeError("expected a string")
    return _Parser(text, variables).parse()


def parse_scalar(text):
    terms = _parse(text, ())
    return terms.get((), ZERO)


def parse_poly(text, var="x"):
    from .poly import Poly

    terms = _parse(text, (var,))
    deg = max((e[0] for e in terms), default=-1)
    coeffs = [ZERO] * (deg + 1)
    for (e,), c in terms.items():
        coeffs[e] = c
    return Poly(coeffs)


def parse_bipoly(text, variables=("u", "v")):
    from .poly import BiPoly

    return BiPoly({e: c for e, c in _parse(text, tuple(variables)).items()})


def parse_operator(text):
    """Parse operator text into the coefficient list ``[Q_0, ..., Q_k]``."""
    from .poly import Poly

    terms = _parse(text, ("x", "D"))
    if not terms:
        raise ParseError("the operator is identically zero", text, 0)
    k = max(e[1] for e in terms)
    dx = max(e[0] for e in terms)
    table = [[ZERO] * (dx + 1) for _ in range(k + 1)]
    for (ex, ed), c in terms.items():
        table[ed][ex] = c
    return [Poly(row) for row in table]
