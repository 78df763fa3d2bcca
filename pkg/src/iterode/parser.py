"""Parse rational-function expressions in ``x``.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor | factor)*
    factor := "-" factor | atom ("^" nat)?
    atom   := nat | nat "/" nat | "x" | "(" expr ")"

A ``nat/nat`` literal is only recognised as the first factor of a term, so
``2/3^2`` is ``4/9`` while ``x/2/3`` is ``x/6``.  A factor written directly
after another one without an operator (``3x``, ``2(x+1)``) is multiplied,
provided it starts with ``x`` or ``(``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from iterode.exact import RationalFunction


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class DivisionByZeroError(ParseError, ZeroDivisionError):
    pass


# -- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    offset: int = 0


Expr = Union[Num, Var, Neg, BinOp]


# -- tokenizer --------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # "num", "x", an operator character, or "end"
    offset: int
    value: int = 0


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isascii() and c.isdigit():
            j = i
            while j < len(text) and text[j].isascii() and text[j].isdigit():
                j += 1
            tokens.append(Token("num", i, int(text[i:j])))
            i = j
        elif c in "+-*/^()x":
            tokens.append(Token(c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", len(text)))
    return tokens


# -- recursive descent ------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {_describe(tok)}", tok.offset)
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {_describe(tok)}", tok.offset)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in "+-":
            tok = self.advance()
            node = BinOp(tok.kind, node, self.term(), tok.offset)
        return node

    def term(self) -> Expr:
        node = self.factor(first=True)
        while True:
            tok = self.peek()
            if tok.kind in ("*", "/"):
                self.advance()
                node = BinOp(tok.kind, node, self.factor(first=False), tok.offset)
            elif tok.kind in ("x", "("):
                node = BinOp("*", node, self.factor(first=False), tok.offset)
            else:
                return node

    def factor(self, first: bool) -> Expr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.factor(first))
        node = self.atom(first)
        if self.peek().kind == "^":
            caret = self.advance()
            tok = self.peek()
            if tok.kind != "num":
                raise ParseError(
                    "exponent must be a non-negative integer literal", tok.offset
                )
            self.advance()
            node = BinOp("^", node, Num(Fraction(tok.value)), caret.offset)
        return node

    def atom(self, first: bool) -> Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            if first and self.peek().kind == "/" and self.peek(1).kind == "num":
                self.advance()
                den = self.advance()
                if den.value == 0:
                    raise DivisionByZeroError("division by zero", den.offset)
                return Num(Fraction(tok.value, den.value))
            return Num(Fraction(tok.value))
        if tok.kind == "x":
            self.advance()
            return Var()
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"expected a number, 'x' or '(', found {_describe(tok)}", tok.offset)


def _describe(tok: Token) -> str:
    if tok.kind == "end":
        return "end of input"
    if tok.kind == "num":
        return f"number {tok.value}"
    return repr(tok.kind)


def parse_ast(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(node: Expr) -> RationalFunction:
    if isinstance(node, Num):
        return RationalFunction.const(node.value)
    if isinstance(node, Var):
        return RationalFunction.x()
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    left = evaluate(node.left)
    if node.op == "^":
        return left ** int(node.right.value)
    right = evaluate(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right.is_zero():
        raise DivisionByZeroError("division by the zero polynomial", node.offset)
    return left / right


def parse_expression(text: str) -> RationalFunction:
    """Parse ``text`` into a canonical :class:`RationalFunction`."""
    return evaluate(parse_ast(text))


def to_text(node: Expr) -> str:
    """Fully parenthesised text for an AST (re-parses to the same value)."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"({v.numerator}/{v.denominator})"
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    if node.op == "^":
        return f"({to_text(node.left)})^{int(node.right.value)}"
    return f"({to_text(node.left)} {node.op} {to_text(node.right)})"


def parse_coefficient_list(text: str) -> list[RationalFunction]:
    """Semicolon-separated expressions ``c0; c1; ...``; a trailing ``;`` is allowed."""
    parts = text.split(";")
    if parts and not parts[-1].strip():
        parts.pop()
    if not parts:
        raise ParseError("empty coefficient list", 0)
    out = []
    offset = 0
    for part in parts:
        try:
            out.append(parse_expression(part))
        except ParseError as exc:
            raise type(exc)(exc.message, offset + exc.offset) from None
        offset += len(part) + 1
    return out

