"""Parsing and evaluation of planar maps given as expression pairs.

The grammar covers exactly what the built-in map gallery needs:

    map   := "(" expr "," expr ")"
    expr  := term (("+" | "-") term)*
    term  := factor (("*" | "/") factor)*
    factor:= unary ("^" integer)?
    unary := "-" unary | atom
    atom  := number | "x" | "y" | func "(" expr ")" | "(" expr ")"
    func  := "sinh" | "cosh" | "asinh" | "sqrt" | "abs"

Whitespace is insignificant; numbers are decimal literals with optional
fraction and exponent; "^" accepts only non-negative integer literals and
is evaluated by repeated multiplication (no branch cuts).

A :class:`PlanarMap` wraps either a parsed expression pair or a native
Python function written against the generic helpers in :mod:`planarinv.dual`.
Both realizations satisfy the same evaluation contract, so everything
downstream is agnostic to how a map was constructed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from . import dual
from .dual import Dual
from .linalg2 import Mat2

_FUNCTIONS = ("sinh", "cosh", "asinh", "sqrt", "abs")

_BINARY = ("add", "sub", "mul", "div")
_UNARY = ("neg",) + _FUNCTIONS
_ARITY = {"num": 0, "x": 0, "y": 0, "pow": 1}
_ARITY.update({k: 2 for k in _BINARY})
_ARITY.update({k: 1 for k in _UNARY})


class ParseError(ValueError):
    """Syntax or vocabulary error in a map expression, with source offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class EvaluationError(ArithmeticError):
    """Runtime evaluation failure, tagged with the offending point."""

    def __init__(self, message: str, point: tuple[float, float]):
        super().__init__(f"{message} while evaluating at ({point[0]!r}, {point[1]!r})")
        self.point = point


@dataclass(frozen=True)
class ExprNode:
    """One node of a parsed expression tree."""

    kind: str
    children: tuple["ExprNode", ...] = ()
    value: float | None = None
    exponent: int | None = None

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown node kind {self.kind!r}")
        if len(self.children) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} node takes {_ARITY[self.kind]} children")
        if self.kind == "pow" and (not isinstance(self.exponent, int) or self.exponent < 0):
            raise ValueError("pow exponent must be a non-negative integer")


class _Token(NamedTuple):
    kind: str  # "num" | "name" | "op" | "end"
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z]+)|(?P<op>[-+*/^(),])"
)


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(source)
    while pos < n:
        if source[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)
        return self.advance()

    def parse_map(self) -> tuple[ExprNode, ExprNode]:
        self.expect_op("(")
        first = self.parse_expr()
        self.expect_op(",")
        second = self.parse_expr()
        self.expect_op(")")
        tail = self.peek()
        if tail.kind != "end":
            raise ParseError(f"unexpected trailing input {tail.text!r}", tail.pos)
        return first, second

    def parse_expr(self) -> ExprNode:
        node = self.parse_term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.parse_term()
            node = ExprNode("add" if op == "+" else "sub", (node, rhs))
        return node

    def parse_term(self) -> ExprNode:
        node = self.parse_factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            rhs = self.parse_factor()
            node = ExprNode("mul" if op == "*" else "div", (node, rhs))
        return node

    def parse_factor(self) -> ExprNode:
        node = self.parse_unary()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            tok = self.peek()
            if tok.kind == "op" and tok.text == "-":
                raise ParseError("exponent must be non-negative", tok.pos)
            if tok.kind != "num" or not tok.text.isdigit():
                raise ParseError("exponent must be an integer literal", tok.pos)
            self.advance()
            node = ExprNode("pow", (node,), exponent=int(tok.text))
        return node

    def parse_unary(self) -> ExprNode:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return ExprNode("neg", (self.parse_unary(),))
        return self.parse_atom()

    def parse_atom(self) -> ExprNode:
        tok = self.advance()
        if tok.kind == "num":
            return ExprNode("num", value=float(tok.text))
        if tok.kind == "name":
            if tok.text == "x":
                return ExprNode("x")
            if tok.text == "y":
                return ExprNode("y")
            if tok.text in _FUNCTIONS:
                self.expect_op("(")
                arg = self.parse_expr()
                self.expect_op(")")
                return ExprNode(tok.text, (arg,))
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.parse_expr()
            self.expect_op(")")
            return node
        raise ParseError(
            "expected a number, variable, function call, or parenthesized expression",
            tok.pos,
        )


def evaluate_node(node: ExprNode, x, y):
    """Evaluate a tree at (x, y); works on floats and on Dual scalars."""
    kind = node.kind
    if kind == "num":
        return node.value
    if kind == "x":
        return x
    if kind == "y":
        return y
    if kind == "pow":
        return dual.ipow(evaluate_node(node.children[0], x, y), node.exponent)
    if kind in _BINARY:
        a = evaluate_node(node.children[0], x, y)
        b = evaluate_node(node.children[1], x, y)
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        return a / b
    arg = evaluate_node(node.children[0], x, y)
    if kind == "neg":
        return -arg
    if kind == "sinh":
        return dual.sinh(arg)
    if kind == "cosh":
        return dual.cosh(arg)
    if kind == "asinh":
        return dual.asinh(arg)
    if kind == "sqrt":
        return dual.sqrt(arg)
    return abs(arg)  # "abs"


def unparse_node(node: ExprNode) -> str:
    """Fully parenthesized source text that reparses to the same tree."""
    kind = node.kind
    if kind == "num":
        return repr(node.value)
    if kind in ("x", "y"):
        return kind
    if kind == "pow":
        return f"{unparse_node(node.children[0])}^{node.exponent}"
    if kind in _BINARY:
        op = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[kind]
        return f"({unparse_node(node.children[0])} {op} {unparse_node(node.children[1])})"
    if kind == "neg":
        return f"(-{unparse_node(node.children[0])})"
    return f"{kind}({unparse_node(node.children[0])})"


@dataclass(frozen=True)
class PlanarMap:
    """A differentiable map of the plane.

    Wraps a generic component function f(x, y) -> (u, v) that accepts
    either floats or Dual scalars.  Construct with :func:`parse` for
    expression-backed maps or :meth:`from_function` for native ones.
    """

    source: str
    _fn: Callable = field(repr=False)
    asts: tuple[ExprNode, ExprNode] | None = field(default=None, repr=False)

    @classmethod
    def from_expressions(cls, first: ExprNode, second: ExprNode, source: str) -> "PlanarMap":
        def fn(x, y):
            return evaluate_node(first, x, y), evaluate_node(second, x, y)

        return cls(source, fn, (first, second))

    @classmethod
    def from_function(cls, fn: Callable, name: str) -> "PlanarMap":
        return cls(f"native:{name}", fn, None)

    def components(self, x, y):
        """Raw component evaluation; x and y may be floats or Duals.

        Intended for building derived maps; no error wrapping is applied.
        """
        return self._fn(x, y)

    def evaluate(self, p: tuple[float, float]) -> tuple[float, float]:
        try:
            u, v = self._fn(float(p[0]), float(p[1]))
        except ZeroDivisionError as exc:
            raise EvaluationError(str(exc) or "division by zero", (p[0], p[1])) from exc
        except (ValueError, OverflowError) as exc:
            raise EvaluationError(str(exc), (p[0], p[1])) from exc
        return (float(u), float(v))

    def evaluate_with_jacobian(
        self, p: tuple[float, float]
    ) -> tuple[tuple[float, float], Mat2]:
        x, y = dual.seed(float(p[0]), float(p[1]))
        try:
            u, v = self._fn(x, y)
        except ZeroDivisionError as exc:
            raise EvaluationError(str(exc) or "division by zero", (p[0], p[1])) from exc
        except (ValueError, OverflowError) as exc:
            raise EvaluationError(str(exc), (p[0], p[1])) from exc
        if not isinstance(u, Dual):
            u = Dual(u)
        if not isinstance(v, Dual):
            v = Dual(v)
        return (u.value, v.value), Mat2(u.dx, u.dy, v.dx, v.dy)

    def unparse(self) -> str:
        """Round-trippable source text (expression-backed maps only)."""
        if self.asts is None:
            return self.source
        return f"({unparse_node(self.asts[0])}, {unparse_node(self.asts[1])})"


def parse(source: str) -> PlanarMap:
    """Parse a comma-separated expression pair like ``"(x - y^3, -y)"``."""
    first, second = _Parser(source).parse_map()
    return PlanarMap.from_expressions(first, second, source)


def recentered(base: PlanarMap, center: tuple[float, float]) -> PlanarMap:
    """Conjugate a map by the translation taking ``center`` to the origin.

    The result fixes the origin whenever ``base`` fixes ``center``; the
    Jacobian is unchanged up to the coordinate shift.
    """
    cx, cy = float(center[0]), float(center[1])

    def fn(x, y):
        u, v = base.components(x + cx, y + cy)
        return u - cx, v - cy

    return PlanarMap(f"recentered({base.source} @ ({cx:g}, {cy:g}))", fn, None)
