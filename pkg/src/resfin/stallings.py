"""Folded subgroup graphs and divisibility of free-group words.

A finitely generated subgroup of a free group is represented by a folded
labeled graph: vertices with at most one outgoing and one incoming edge
per generator label, read from a basepoint. Folding a wedge of word
loops is confluent, so the canonical form (a breadth-first renumbering
from the basepoint) is independent of fold order; tests exercise that by
folding in many randomized orders.

The divisibility of a nontrivial word w is the least index m >= 2 of a
subgroup avoiding w. It is found by iterative deepening on m: a partial
injective coset assignment on m points that walks w from the basepoint
to some other point extends to a full action whose point stabilizer
avoids w and has index at most m.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as kernels
from .words import Word

MAX_DIVISIBILITY_INDEX = 4096


class SubgroupGraph:
    """A folded, basepointed, canonically numbered subgroup graph."""

    __slots__ = ("rank", "num_vertices", "fwd", "bwd")

    def __init__(self, rank: int, fwd: np.ndarray, bwd: np.ndarray):
        self.rank = rank
        self.num_vertices = fwd.shape[1]
        self.fwd = fwd
        self.bwd = bwd

    @classmethod
    def from_words(
        cls,
        words: Iterable[Word],
        rank: int | None = None,
        seed: int | None = None,
    ) -> "SubgroupGraph":
        """Fold a wedge of word loops at a common basepoint.

        With a seed, fold steps are performed in a randomized order; the
        canonical result is the same either way.
        """
        word_list = list(words)
        if rank is None:
            if not word_list:
                raise ValueError("rank is required when no words are given")
            rank = max(w.rank for w in word_list)
        for w in word_list:
            if w.rank > rank:
                raise ValueError(f"word rank {w.rank} exceeds graph rank {rank}")
        edges: list[tuple[int, int, int]] = []
        nverts = 1
        for w in word_list:
            prev = 0
            seq = [int(l) for l in w.letters]
            for i, letter in enumerate(seq):
                nxt = 0 if i == len(seq) - 1 else nverts
                if nxt != 0:
                    nverts += 1
                if letter > 0:
                    edges.append((prev, letter, nxt))
                else:
                    edges.append((nxt, -letter, prev))
                prev = nxt
        rng = random.Random(seed) if seed is not None else None
        merged_edges, nverts = _fold(edges, nverts, rng)
        return cls(rank, *_canonicalize(merged_edges, nverts, rank))

    def contains(self, word: Word) -> bool:
        """Whether the word labels a closed path at the basepoint."""
        if word.rank > self.rank:
            raise ValueError(f"word rank {word.rank} exceeds graph rank {self.rank}")
        v = 0
        for letter in word.letters:
            l = int(letter)
            v = int(self.fwd[l - 1, v]) if l > 0 else int(self.bwd[-l - 1, v])
            if v < 0:
                return False
        return v == 0

    def signature(self) -> bytes:
        return self.fwd.tobytes() + self.bwd.tobytes()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupGraph)
            and self.rank == other.rank
            and self.signature() == other.signature()
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.signature()))

    def __repr__(self) -> str:
        return (
            f"SubgroupGraph(rank={self.rank}, vertices={self.num_vertices})"
        )


def _fold(
    edges: list[tuple[int, int, int]], nverts: int, rng: random.Random | None
) -> tuple[set[tuple[int, int, int]], int]:
    """Merge vertices until no label leaves or enters a vertex twice."""
    parent = list(range(nverts))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    while True:
        current = {(find(u), l, find(v)) for (u, l, v) in edges}
        out_map: dict[tuple[int, int], int] = {}
        in_map: dict[tuple[int, int], int] = {}
        violations: list[tuple[int, int]] = []
        for u, l, v in sorted(current):
            if (u, l) in out_map and out_map[(u, l)] != v:
                violations.append((out_map[(u, l)], v))
            else:
                out_map[(u, l)] = v
            if (v, l) in in_map and in_map[(v, l)] != u:
                violations.append((in_map[(v, l)], u))
            else:
                in_map[(v, l)] = u
        if not violations:
            final = current
            break
        if rng is not None:
            union(*rng.choice(violations))
        else:
            for pair in violations:
                union(*pair)
    return final, nverts


def _canonicalize(
    edges: set[tuple[int, int, int]], nverts: int, rank: int
) -> tuple[np.ndarray, np.ndarray]:
    """Renumber by BFS from the basepoint: labels ascending, out then in."""
    out_map = {(u, l): v for (u, l, v) in edges}
    in_map = {(v, l): u for (u, l, v) in edges}
    relabel = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for l in range(1, rank + 1):
            for nbr_map, key in ((out_map, (v, l)), (in_map, (v, l))):
                nbr = nbr_map.get(key)
                if nbr is not None and nbr not in relabel:
                    relabel[nbr] = len(relabel)
                    queue.append(nbr)
    count = len(relabel)
    fwd = np.full((rank, count), -1, dtype=np.int64)
    bwd = np.full((rank, count), -1, dtype=np.int64)
    for u, l, v in edges:
        fwd[l - 1, relabel[u]] = relabel[v]
        bwd[l - 1, relabel[v]] = relabel[u]
    return fwd, bwd


def divisibility(word: Word, max_index: int | None = None) -> int | None:
    """Least index m >= 2 of a subgroup avoiding the word.

    None means no avoiding subgroup exists with index up to max_index;
    the default cap len(w)/2 + 2 is always sufficient, so None can only
    come back when a smaller cap is given explicitly.
    """
    length = len(word.letters)
    if length == 0:
        raise ValueError("the identity word lies in every subgroup")
    cap = max_index if max_index is not None else length // 2 + 2
    if cap > MAX_DIVISIBILITY_INDEX:
        raise ValueError(f"index cap {cap} exceeds {MAX_DIVISIBILITY_INDEX}")
    letters = np.asarray(word.letters, dtype=np.int8)
    for m in range(2, cap + 1):
        if kernels.coset_feasible(letters, word.rank, m):
            return m
    return None


def buskin_check(word: Word) -> bool:
    """Whether some subgroup of index at most len(w)/2 + 2 avoids the word."""
    return divisibility(word) is not None
