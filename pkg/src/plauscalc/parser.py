"""Recursive-descent parser for exact eps-expressions.

Grammar (whitespace insensitive)::

    Expr     := Term (('+' | '-') Term)*
    Term     := Pow (('*' | '/') Pow)*
    Pow      := Atom ('^' UInt)?
    Atom     := '-'? (Rational | 'eps' | '(' Expr ')')
    Rational := UInt ('/' UInt)?

``^`` binds tighter than ``*`` and ``/``; exponents are nonnegative integer
literals.  All arithmetic is exact, so ``1/2`` parsed as a division and as a
rational literal denote the same value.  Parsing yields the canonical
:class:`~plauscalc.epsnum.EpsRational` of the expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .epsnum import EPS, EpsRational, const

__all__ = ["EpsSyntaxError", "parse_eps_expr", "parse_ast", "Num", "Var", "BinOp", "Power", "Negate"]


class EpsSyntaxError(ValueError):
    """Syntax error with the 0-based position of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


# -- expression tree ---------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass  # the infinitesimal symbol


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Negate:
    operand: "Node"


Node = Union[Num, Var, BinOp, Power, Negate]


# -- tokenizer ----------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # int | eps | op | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            word = text[i:j]
            if word != "eps":
                raise EpsSyntaxError(f"unknown symbol {word!r}", i)
            tokens.append(_Token("eps", word, i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise EpsSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# -- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def token(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        t = self.token
        self.index += 1
        return t

    def accept_op(self, *ops: str) -> Optional[str]:
        t = self.token
        if t.kind == "op" and t.text in ops:
            self.advance()
            return t.text
        return None

    def expect_op(self, op: str) -> None:
        t = self.token
        if t.kind != "op" or t.text != op:
            raise EpsSyntaxError(f"expected {op!r}", t.pos)
        self.advance()

    def parse(self) -> Node:
        node = self.expr()
        t = self.token
        if t.kind != "end":
            raise EpsSyntaxError(f"unexpected {t.text!r}", t.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            op = self.accept_op("+", "-")
            if op is None:
                return node
            node = BinOp(op, node, self.term())

    def term(self) -> Node:
        node = self.power()
        while True:
            op = self.accept_op("*", "/")
            if op is None:
                return node
            node = BinOp(op, node, self.power())

    def power(self) -> Node:
        base = self.atom()
        if self.accept_op("^"):
            t = self.token
            if t.kind != "int":
                raise EpsSyntaxError("expected a nonnegative integer exponent", t.pos)
            self.advance()
            return Power(base, int(t.text))
        return base

    def atom(self) -> Node:
        if self.accept_op("-"):
            return Negate(self.atom())
        t = self.token
        if t.kind == "int":
            self.advance()
            return Num(Fraction(int(t.text)))
        if t.kind == "eps":
            self.advance()
            return Var()
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        raise EpsSyntaxError("expected a value", t.pos)


def _evaluate(node: Node) -> EpsRational:
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Var):
        return EPS
    if isinstance(node, Negate):
        return -_evaluate(node.operand)
    if isinstance(node, Power):
        return _evaluate(node.base) ** node.exponent
    if isinstance(node, BinOp):
        left = _evaluate(node.left)
        right = _evaluate(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left / right
    raise TypeError(f"not an expression node: {node!r}")


def parse_ast(text: str) -> Node:
    """Parse to the expression tree without evaluating."""
    return _Parser(_tokenize(text)).parse()


def parse_eps_expr(text: str) -> EpsRational:
    """Parse an eps-expression to its canonical exact value.

    Raises :class:`EpsSyntaxError` on malformed input and
    :class:`ZeroDivisionError` when the expression divides by zero.
    """
    return _evaluate(parse_ast(text))
