"""Constructors for words that are laws in bounded families of finite groups.

power_law(n) gives x^(n!), a law in every group of order <= n.
commutator_word(r1 > ... > rm) builds a balanced commutator word in F_2
that vanishes whenever the first argument satisfies X^(r_i) = 1 for some i;
law_word(n) instantiates it with exponents n, n-1, ..., 1, yielding a word
of length <= 4n^2(n+1) that is a law in every group of order <= n^2/9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import words
from .words import Word

POWER_LAW_MAX = 12

Tree = int | tuple  # leaf position (1-based) or (left, right)


@dataclass(frozen=True)
class LawRecipe:
    """A built commutator law word plus the tree that produced it."""

    exponents: tuple[int, ...]
    tree: Tree
    word: Word
    length_bound: int

    def subtree_exponents(self, tree: Tree | None = None) -> tuple[int, ...]:
        if tree is None:
            tree = self.tree
        if isinstance(tree, int):
            return (self.exponents[tree - 1],)
        left, right = tree
        return self.subtree_exponents(left) + self.subtree_exponents(right)

    def top_split(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Exponents under each child of the root commutator."""
        if isinstance(self.tree, int):
            raise ValueError("single-leaf recipe has no top-level split")
        left, right = self.tree
        return self.subtree_exponents(left), self.subtree_exponents(right)


def power_law(n: int) -> Word:
    """x^(n!), a law in every group of order <= n. Requires 1 <= n <= 12."""
    if not 1 <= n <= POWER_LAW_MAX:
        raise ValueError(f"n must be in 1..{POWER_LAW_MAX}, got {n}")
    arr = np.full(math.factorial(n), 1, np.int8)
    return Word._from_reduced(arr, 2)


def _leaf_word(position: int, exponent: int) -> Word:
    w = words.power(words.generator(1, rank=2), exponent)
    if position % 2 == 0:
        w = words.conjugate(w, words.generator(2, rank=2))
    return w


def _build_tree(lo: int, hi: int) -> Tree:
    if lo == hi:
        return lo
    m = hi - lo + 1
    mid = lo + (m + 1) // 2 - 1  # left child takes ceil(m/2) leaves
    return (_build_tree(lo, mid), _build_tree(mid + 1, hi))


def _tree_word(tree: Tree, exponents: Sequence[int]) -> Word:
    if isinstance(tree, int):
        return _leaf_word(tree, exponents[tree - 1])
    left, right = tree
    return words.commutator(_tree_word(left, exponents), _tree_word(right, exponents))


def commutator_word(exponents: Sequence[int]) -> LawRecipe:
    """Balanced commutator word for strictly decreasing positive exponents.

    Leaves, in exponent order, carry x^(r_i) at odd positions and
    (x^(r_i))^y at even positions; the tree splits ceil(m/2) | floor(m/2).
    Non-triviality and the 4m^2(r1+1) length bound are verified here and
    violations raise rather than returning a degenerate word.
    """
    r = tuple(int(e) for e in exponents)
    if not r:
        raise ValueError("need at least one exponent")
    if any(e < 1 for e in r):
        raise ValueError(f"exponents must be positive, got {r}")
    if any(a <= b for a, b in zip(r, r[1:])):
        raise ValueError(f"exponents must be strictly decreasing, got {r}")
    m = len(r)
    tree = _build_tree(1, m)
    word = _tree_word(tree, r)
    bound = 4 * m * m * (r[0] + 1)
    if word.is_identity():
        raise ValueError(f"commutator word for {r} reduced to the identity")
    if len(word) > bound:
        raise ValueError(
            f"commutator word for {r} has length {len(word)} > bound {bound}"
        )
    return LawRecipe(exponents=r, tree=tree, word=word, length_bound=bound)


def law_word(n: int) -> LawRecipe:
    """The order-bounded law v_n = commutator word on exponents n, ..., 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return commutator_word(range(n, 0, -1))
