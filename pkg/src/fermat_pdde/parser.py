"""Expression parser for exponential polynomials.

Grammar (operators by increasing precedence)::

    expr    := expr ('+'|'-') expr | expr ('*'|'/') expr | ('-'|'+') expr
             | expr '^' expr | atom
    atom    := number | 'i' | 'pi' | 'e' | 'z' digits | '(' expr ')'
             | 'e' '^' atom | 'exp' '(' expr ')'
             | 'ln' '(' expr ')' | 'sqrt' '(' expr ')'

A number immediately followed by a name or '(' is an implicit product,
so ``2i``, ``3pi`` and ``0.5z1`` are accepted.  Numbers take an optional
decimal exponent (``1e-05``); ``2e^(z1)`` still reads as ``2*e^(z1)``.
Divisors, ``ln``/``sqrt`` arguments and non-integer powers must be
constants, and exponents must be exp-free polynomials.
"""
from __future__ import annotations

import cmath
import re

from .errors import ExpressionSyntaxError, NotInClass
from .expcore import ExpPoly, Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),]))"
)

_CONSTANTS = {"i": 1j, "pi": cmath.pi}
_FUNCTIONS = ("exp", "ln", "sqrt")


class _Tok:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind, self.value, self.pos = kind, value, pos

    def __repr__(self):
        return f"{self.kind}:{self.value!r}@{self.pos}"


def tokenize(text):
    toks, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            toks.append(_Tok("end", None, pos))
            return toks
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        toks.append(_Tok(m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()


def _constant_value(f, what, pos):
    p = f.as_polynomial()
    if p is None or not p.is_constant():
        raise NotInClass(f"{what} must be a constant (position {pos})")
    v = p.constant_term
    # drop signed zeros so ln/sqrt of negative reals take the principal branch
    return complex(v.real + 0.0, v.imag + 0.0)


class _Parser:
    def __init__(self, text, dim):
        self.text = text
        self.dim = dim
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.peek()
        if tok.kind != "op" or tok.value != value:
            raise ExpressionSyntaxError(f"unexpected {_describe(tok)}", tok.pos, [repr(value)])
        return self.advance()

    def parse(self):
        result = self.expr(0)
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionSyntaxError(
                f"unexpected {_describe(tok)}", tok.pos, ["operator", "end of input"]
            )
        return result

    # Pratt loop -----------------------------------------------------

    def expr(self, rbp):
        left, prev = self.nud()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "+-":
                lbp = 10
            elif tok.kind == "op" and tok.value in "*/":
                lbp = 20
            elif tok.kind == "op" and tok.value == "^":
                lbp = 30
            elif prev == "num" and (tok.kind in ("ident", "num") or (tok.kind == "op" and tok.value == "(")):
                lbp = 20  # implicit product after a literal
                if tok.kind == "num":
                    raise ExpressionSyntaxError("two adjacent numbers", tok.pos, ["operator"])
            else:
                return left
            if lbp <= rbp:
                return left
            if lbp == 20 and not (tok.kind == "op" and tok.value in "*/"):
                left = left * self.expr(20)
            else:
                self.advance()
                left = self.led(tok, left)
            prev = None

    def led(self, tok, left):
        op = tok.value
        if op == "+":
            return left + self.expr(10)
        if op == "-":
            return left - self.expr(10)
        if op == "*":
            return left * self.expr(20)
        if op == "/":
            right = self.expr(20)
            d = _constant_value(right, "divisor", tok.pos)
            if d == 0:
                raise ZeroDivisionError(f"division by zero at position {tok.pos}")
            return left / d
        # '^', right associative
        right = self.expr(29)
        return _power(left, right, tok.pos)

    def nud(self):
        tok = self.advance()
        if tok.kind == "num":
            return ExpPoly.constant(float(tok.value), self.dim), "num"
        if tok.kind == "op":
            if tok.value == "(":
                val = self.expr(0)
                self.expect(")")
                return val, None
            if tok.value == "-":
                return -self.expr(25), None
            if tok.value == "+":
                return self.expr(25), None
            raise ExpressionSyntaxError(f"unexpected {_describe(tok)}", tok.pos, _ATOM_EXPECTED)
        if tok.kind == "ident":
            return self.ident(tok), None
        raise ExpressionSyntaxError("unexpected end of input", tok.pos, _ATOM_EXPECTED)

    def ident(self, tok):
        name = tok.value
        if name == "e":
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "^":
                self.advance()
                arg = self.expr(29)
                return _exp_of(arg, nxt.pos)
            return ExpPoly.constant(cmath.e, self.dim)
        if name in _CONSTANTS:
            return ExpPoly.constant(_CONSTANTS[name], self.dim)
        if name in _FUNCTIONS:
            self.expect("(")
            arg = self.expr(0)
            self.expect(")")
            if name == "exp":
                return _exp_of(arg, tok.pos)
            v = _constant_value(arg, f"argument of {name}", tok.pos)
            if name == "ln":
                if v == 0:
                    raise ValueError(f"ln(0) at position {tok.pos}")
                return ExpPoly.constant(cmath.log(v), self.dim)
            return ExpPoly.constant(cmath.sqrt(v), self.dim)
        m = re.fullmatch(r"z([1-9][0-9]*)", name)
        if m:
            j = int(m.group(1))
            if j > self.dim:
                raise ExpressionSyntaxError(
                    f"variable {name} exceeds dimension {self.dim}", tok.pos, [f"z1..z{self.dim}"]
                )
            return ExpPoly.from_polynomial(Polynomial.variable(j, self.dim))
        raise ExpressionSyntaxError(f"unknown name {name!r}", tok.pos, _ATOM_EXPECTED)


_ATOM_EXPECTED = ["number", "variable", "'i'", "'pi'", "'e'", "'('", "function"]


def _describe(tok):
    if tok.kind == "end":
        return "end of input"
    return f"{tok.value!r}"


def _exp_of(arg, pos):
    p = arg.as_polynomial()
    if p is None:
        raise NotInClass(f"exponent must be an exp-free polynomial (position {pos})")
    return ExpPoly.exp(p)


def _power(base, expo, pos):
    k = _constant_value(expo, "power", pos)
    if k.imag == 0 and k.real == int(k.real) and k.real >= 0:
        return base ** int(k.real)
    p = base.as_polynomial()
    if p is not None and p.is_constant():
        return ExpPoly.constant(p.constant_term**k, base.dim)
    raise NotInClass(f"non-integer or negative power of a non-constant (position {pos})")


def parse_expression(text, n):
    """Parse ``text`` into a canonical :class:`ExpPoly` in ``n`` variables."""
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(text, n).parse()


def parse_polynomial(text, n):
    f = parse_expression(text, n)
    p = f.as_polynomial()
    if p is None:
        raise NotInClass(f"expected a polynomial, got exponentials in {text!r}")
    return p


def parse_constant(text):
    """Parse a constant such as ``2*ln(3)``, ``-pi*i/3`` or ``0.5+2i``."""
    if isinstance(text, (int, float, complex)):
        return complex(text)
    val = _Parser(text, 1).parse()
    return _constant_value(val, "value", 0)


def split_top_level(text, sep=","):
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts
