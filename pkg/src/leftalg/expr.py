"""Element expressions such as ``x0 + t`` or ``(x0+t)^-1``.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary | implicit-t)*
    unary  := '-' unary | factor
    factor := atom ('^' ['-'] digits)?
    atom   := 'x' digits | 't' | rational | '(' expr ')'

A rational is ``p`` or ``p/q``.  The ``*`` may be omitted before ``t``,
so ``3t`` and ``x0t^2`` parse as products.  ``render`` produces text
that parses back to the same tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError
from .scalars import x as var
from .series import SkewSeries, T as T_SERIES, series_inv


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class T:
    pass


@dataclass(frozen=True)
class RationalLit:
    value: Fraction


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Paren:
    inner: "Node"


Node = Union[Var, T, RationalLit, Add, Sub, Mul, Pow, Neg, Paren]

_ATOM_START = {"x<digits>", "t", "number", "("}


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message, expected, pos=None):
        pos = self.pos if pos is None else pos
        offset = len(self.src[:pos].encode("utf-8"))
        raise ParseError(message, offset, set(expected))

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        return self.src[start : self.pos]

    def parse(self) -> Node:
        if not self.src.strip():
            self.error("empty expression", _ATOM_START)
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}", {"+", "-", "*", "^", "end of input"})
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> Node:
        node = self.unary()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                node = Mul(node, self.unary())
            elif c == "t":
                node = Mul(node, self.factor())
            else:
                return node

    def unary(self) -> Node:
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Node:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            sign = 1
            if self.pos < len(self.src) and self.src[self.pos] in "+-":
                sign = -1 if self.src[self.pos] == "-" else 1
                self.pos += 1
                self.skip()
            d = self.digits()
            if not d:
                self.error("exponent must be an integer", {"integer"})
            return Pow(base, sign * int(d))
        return base

    def atom(self) -> Node:
        c = self.peek()
        if c == "x":
            self.pos += 1
            d = self.digits()
            if not d:
                self.error("variable index expected after 'x'", {"digits"})
            return Var(int(d))
        if c == "t":
            self.pos += 1
            return T()
        if c.isdigit():
            num = self.digits()
            if self.pos < len(self.src) and self.src[self.pos] == "/":
                self.pos += 1
                den = self.digits()
                if not den:
                    self.error("denominator expected", {"digits"})
                if int(den) == 0:
                    self.error("zero denominator", {"nonzero digits"}, self.pos - len(den))
                return RationalLit(Fraction(int(num), int(den)))
            return RationalLit(Fraction(int(num)))
        if c == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("unbalanced parenthesis", {")"})
            self.pos += 1
            return Paren(inner)
        self.error(f"unexpected {c!r}" if c else "unexpected end of input", _ATOM_START)


def parse_expr(src: str) -> Node:
    return _Parser(src).parse()


def render(node: Node) -> str:
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, T):
        return "t"
    if isinstance(node, RationalLit):
        return str(node.value)
    if isinstance(node, Add):
        return f"{render(node.left)} + {render(node.right)}"
    if isinstance(node, Sub):
        return f"{render(node.left)} - {render(node.right)}"
    if isinstance(node, Mul):
        return f"{render(node.left)}*{render(node.right)}"
    if isinstance(node, Pow):
        return f"{render(node.base)}^{node.exponent}"
    if isinstance(node, Neg):
        return f"-{render(node.operand)}"
    if isinstance(node, Paren):
        return f"({render(node.inner)})"
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, precision=None) -> SkewSeries:
    """Value of the expression in D; negative powers use truncated inverses."""
    if isinstance(node, Var):
        return SkewSeries.coerce(var(node.index))
    if isinstance(node, T):
        return T_SERIES
    if isinstance(node, RationalLit):
        return SkewSeries.coerce(node.value)
    if isinstance(node, Add):
        return evaluate(node.left, precision) + evaluate(node.right, precision)
    if isinstance(node, Sub):
        return evaluate(node.left, precision) - evaluate(node.right, precision)
    if isinstance(node, Mul):
        return evaluate(node.left, precision) * evaluate(node.right, precision)
    if isinstance(node, Pow):
        base = evaluate(node.base, precision)
        if node.exponent < 0:
            return series_inv(base, precision) ** (-node.exponent)
        return base**node.exponent
    if isinstance(node, Neg):
        return -evaluate(node.operand, precision)
    if isinstance(node, Paren):
        return evaluate(node.inner, precision)
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(src: str, precision=None) -> SkewSeries:
    return evaluate(parse_expr(src), precision)
