"""Word expression parsing.

Grammar (whitespace ignored):

    expr   := factor+
    factor := atom ('^' (signed-integer | atom))*
    atom   := letter | '1' | '(' expr ')' | '[' expr ',' expr ']'
    letter := [a-zA-Z] | [gG] digits      uppercase = inverse, '1' = empty word

'^' followed by an integer is a power, followed by an atom a conjugation
(u^v = v^-1 u v); juxtaposition is product. Letters x, y, z, w name
generators 1..4; a word's rank is inferred as the highest index used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import words
from .words import Word

WordExpr = Union["Gen", "Product", "Power", "Conjugate", "Commutator"]


@dataclass(frozen=True)
class Gen:
    letter: str


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: WordExpr
    exponent: int


@dataclass(frozen=True)
class Conjugate:
    base: WordExpr
    by: WordExpr


@dataclass(frozen=True)
class Commutator:
    left: WordExpr
    right: WordExpr


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ValueError:
        return ValueError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def expect(self, c: str) -> None:
        got = self.take()
        if got != c:
            self.pos -= 1
            raise self.error(f"expected {c!r}, got {got!r}")

    def parse_expr(self) -> WordExpr:
        factors = [self.parse_factor()]
        while self.peek() not in ("", ")", "]", ","):
            factors.append(self.parse_factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_factor(self) -> WordExpr:
        node = self.parse_atom()
        while self.peek() == "^":
            self.take()
            c = self.peek()
            if c.isdigit() or c in "+-":
                node = Power(node, self.parse_int())
            else:
                node = Conjugate(node, self.parse_atom())
        return node

    def parse_atom(self) -> WordExpr:
        c = self.peek()
        if c == "(":
            self.take()
            node = self.parse_expr()
            self.expect(")")
            return node
        if c == "[":
            self.take()
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return Commutator(left, right)
        if c == "1":
            self.take()
            return Product(())
        if c.isalpha():
            self.take()
            name = c
            if c in "gG":
                # numbered generators beyond w: g1, g2, ... (G1 = inverse)
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    name += self.text[self.pos]
                    self.pos += 1
            return Gen(name)
        raise self.error(f"expected a letter, '(' or '[', got {c!r}")

    def parse_int(self) -> int:
        sign = 1
        c = self.peek()
        if c in "+-":
            self.take()
            if c == "-":
                sign = -1
        digits = ""
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            digits += self.text[self.pos]
            self.pos += 1
        if not digits:
            raise self.error("expected digits after exponent sign")
        return sign * int(digits)


def parse(text: str) -> WordExpr:
    """Parse expression text into a WordExpr tree."""
    p = _Parser(text)
    if p.peek() == "":
        raise p.error("empty expression")
    node = p.parse_expr()
    if p.peek() != "":
        raise p.error(f"trailing input {p.peek()!r}")
    return node


def flatten(expr: WordExpr, rank: int | None = None) -> Word:
    """Evaluate an expression tree to a reduced Word.

    Rank defaults to the highest generator index the expression mentions;
    an explicit rank must cover every name used.
    """
    word = _eval(expr)
    if rank is not None:
        return word.with_rank(rank)
    return word


def _eval(expr: WordExpr) -> Word:
    if isinstance(expr, Gen):
        idx = words.gen_index(expr.letter)
        return words.generator(idx if expr.letter.islower() else -idx)
    if isinstance(expr, Product):
        out = Word()
        for f in expr.factors:
            out = words.multiply(out, _eval(f))
        return out
    if isinstance(expr, Power):
        return words.power(_eval(expr.base), expr.exponent)
    if isinstance(expr, Conjugate):
        return words.conjugate(_eval(expr.base), _eval(expr.by))
    if isinstance(expr, Commutator):
        return words.commutator(_eval(expr.left), _eval(expr.right))
    raise TypeError(f"not a WordExpr: {expr!r}")


def word_from_text(text: str, rank: int | None = None) -> Word:
    """parse + flatten in one step."""
    return flatten(parse(text), rank)
