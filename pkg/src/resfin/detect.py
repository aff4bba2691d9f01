"""Detecting nontrivial words in small finite groups.

The detection order of a reduced word w is the least order of a finite
group G admitting a homomorphism from the free group that sends w away
from the identity. Scanning a complete catalog of small groups in
ascending (order, id) order makes the answer exact up to the catalog
bound; beyond it the word is reported as undetected.

Tuple scans fix the first coordinate to conjugacy class representatives,
which is sound because a conjugate tuple maps w to a conjugate value.
The documented scan order is therefore: first used generator over class
representatives ascending, remaining used generators over all elements
ascending, rightmost coordinate fastest; unused generators map to the
identity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as kernels
from .catalog import Catalog
from .groups import FiniteGroup, _mat_mul, _psl2_rep
from .words import Word, canonical_cyclic_words

DEFAULT_MAX_OPS = 50_000_000


class SearchBudgetExceeded(Exception):
    """A scan was abandoned because its cost estimate passed the budget."""

    def __init__(self, message: str, estimated_ops: int):
        super().__init__(message)
        self.estimated_ops = estimated_ops


def evaluate(group: FiniteGroup, word: Word, images: Sequence[int]) -> int:
    """Image of the word under generator i -> images[i]."""
    if len(images) != word.rank:
        raise ValueError(f"need {word.rank} images, got {len(images)}")
    for v in images:
        if not 0 <= v < group.order:
            raise ValueError(f"element index {v} out of range")
    acc = 0
    for letter in word.letters:
        g = images[letter - 1] if letter > 0 else group.inv(images[-letter - 1])
        acc = group.mul(acc, g)
    return acc


def _used_generators(word: Word) -> tuple[list[int], np.ndarray]:
    """Indices of generators that occur, plus letters remapped onto them."""
    used = sorted({abs(int(l)) - 1 for l in word.letters})
    remap = {g: k + 1 for k, g in enumerate(used)}
    letters = np.empty(len(word.letters), dtype=np.int8)
    for i, l in enumerate(word.letters):
        code = remap[abs(int(l)) - 1]
        letters[i] = code if l > 0 else -code
    return used, letters


def _expand_tuple(word: Word, used: list[int], values: Sequence[int]) -> tuple:
    full = [0] * word.rank
    for g, v in zip(used, values):
        full[g] = int(v)
    return tuple(full)


def first_counterexample(
    group: FiniteGroup, word: Word, max_ops: int = DEFAULT_MAX_OPS
) -> tuple[int, ...] | None:
    """First tuple (in documented scan order) where the word survives.

    None means the word is a law in the group.
    """
    if len(word.letters) == 0:
        return None
    used, letters = _used_generators(word)
    u = len(used)
    reps = group.conjugacy_class_reps()
    if u == 1:
        e = int(np.sum(np.sign(letters, dtype=np.int64)))
        for x in reps:
            if group.power(int(x), e) != 0:
                return _expand_tuple(word, used, (int(x),))
        return None
    if u == 2 and group.table is not None:
        code = kernels.law_scan_pairs(
            np.asarray(group.table, dtype=np.int32),
            np.asarray(group.inverses, dtype=np.int32),
            letters,
            np.asarray(reps, dtype=np.int64),
        )
        if code < 0:
            return None
        return _expand_tuple(word, used, divmod(int(code), group.order))
    if u == 2 and group.kind in ("sl2", "psl2"):
        hit = _matrix_pair_scan(group, letters, reps)
        return None if hit is None else _expand_tuple(word, used, hit)
    return _odometer_scan(group, word, used, letters, reps, max_ops)


def _odometer_scan(group, word, used, letters, reps, max_ops):
    n = group.order
    u = len(used)
    estimate = len(reps) * n ** (u - 1) * len(letters)
    if estimate > max_ops:
        raise SearchBudgetExceeded(
            f"scan of {group.name} needs about {estimate} operations", estimate
        )
    inv = group.inverses
    seq = [int(l) for l in letters]
    for head in reps:
        for rest in itertools.product(range(n), repeat=u - 1):
            values = (int(head),) + rest
            acc = 0
            for l in seq:
                g = values[l - 1] if l > 0 else int(inv[values[-l - 1]])
                acc = group.mul(acc, g)
            if acc != 0:
                return _expand_tuple(word, used, values)
    return None


def _matrix_pair_scan(group, letters, reps):
    """Vectorized rank-2 scan for matrix groups without a table."""
    p = group.p
    mats = group.matrices.reshape(-1, 2, 2)
    n = mats.shape[0]
    ident = np.eye(2, dtype=np.int64)
    neg_ident = (-ident) % p
    inv_mats = mats[np.asarray(group.inverses, dtype=np.int64)]
    for x in reps:
        per_letter = {
            1: mats[int(x)],
            -1: inv_mats[int(x)],
        }
        acc = np.broadcast_to(ident, (n, 2, 2)).copy()
        for l in letters:
            li = int(l)
            if abs(li) == 1:
                acc = acc @ per_letter[li] % p
            else:
                operand = mats if li > 0 else inv_mats
                acc = np.matmul(acc, operand) % p
        is_id = (acc == ident).all(axis=(1, 2))
        if group.kind == "psl2" and p != 2:
            is_id |= (acc == neg_ident).all(axis=(1, 2))
        bad = np.flatnonzero(~is_id)
        if bad.size:
            return (int(x), int(bad[0]))
    return None


def is_law(group: FiniteGroup, word: Word, max_ops: int = DEFAULT_MAX_OPS) -> bool:
    """Whether the word maps to the identity under every assignment."""
    return first_counterexample(group, word, max_ops) is None


@dataclass(frozen=True)
class DetectionResult:
    word: Word
    min_order: int | None
    witness_id: str | None
    witness_name: str | None
    witness_tuple: tuple[int, ...] | None
    searched_to: int

    @property
    def conclusive(self) -> bool:
        return self.min_order is not None


def detection_order(
    word: Word, catalog: Catalog, max_ops: int = DEFAULT_MAX_OPS
) -> DetectionResult:
    """Least group order in the catalog where the word survives.

    An empty (identity) word is a law everywhere, so it always comes back
    undetected.
    """
    for entry in catalog.entries:
        hit = first_counterexample(entry.group, word, max_ops)
        if hit is not None:
            return DetectionResult(
                word, entry.group.order, entry.id, entry.group.name, hit,
                catalog.max_order,
            )
    return DetectionResult(word, None, None, None, None, catalog.max_order)


def abelian_k(exponents: Iterable[int]) -> int:
    """Least modulus m >= 2 with the exponent vector nonzero mod m.

    This is the detection order of a word over free abelian groups: the
    word with these generator exponent sums survives in Z/m exactly when
    m does not divide their gcd.
    """
    g = 0
    for e in exponents:
        g = math.gcd(g, int(e))
    if g == 0:
        raise ValueError("zero exponent vector is undetectable in abelian groups")
    m = 2
    while g % m == 0:
        m += 1
    return m


def shortest_law(
    group: FiniteGroup, max_len: int, max_ops: int = DEFAULT_MAX_OPS
) -> Word | None:
    """Shortest rank-2 law of the group, up to max_len; ties broken by the
    canonical ordering of cyclic representatives.

    Laws are closed under cyclic rotation, inversion and signed generator
    permutations, so only canonical representatives are scanned.
    """
    for length in range(1, max_len + 1):
        for w in canonical_cyclic_words(2, length):
            if is_law(group, w, max_ops):
                return w
    return None


# -- projective witnesses ---------------------------------------------------


@dataclass(frozen=True)
class ProjectiveWitness:
    prime: int
    images: tuple[tuple[int, int, int, int], ...]
    group_order: int

    @property
    def detection_bound(self) -> int:
        return self.group_order


def _next_prime(n: int) -> int:
    candidate = max(n + 1, 2)
    while True:
        if all(candidate % d for d in range(2, int(candidate**0.5) + 1)):
            return candidate
        candidate += 1


def _lex_sl2(p: int):
    """Determinant-1 matrices in ascending lexicographic (a,b,c,d) order."""
    for b in range(1, p):
        c = (-pow(b, p - 2, p)) % p
        for d in range(p):
            yield (0, b, c, d)
    for a in range(1, p):
        a_inv = pow(a, p - 2, p)
        for b in range(p):
            for c in range(p):
                yield (a, b, c, (1 + b * c) * a_inv % p)


def _word_is_projectively_trivial(word_letters, images, p: int) -> bool:
    acc = (1, 0, 0, 1)
    for l in word_letters:
        m = images[abs(int(l)) - 1]
        if l < 0:
            a, b, c, d = m
            m = (d % p, -b % p, -c % p, a % p)
        acc = _mat_mul(acc, m, p)
    if acc == (1, 0, 0, 1):
        return True
    return p != 2 and acc == (p - 1, 0, 0, p - 1)


def psl2_witness(
    word: Word, seed: int = 0, sweep_size: int = 12, max_samples: int = 20000
) -> ProjectiveWitness:
    """Projective witness for a nontrivial reduced word.

    Picks the smallest prime p > 3|w| + 1 and finds generator images in
    PSL2(F_p) keeping the word away from the identity, which bounds its
    detection order by |PSL2(F_p)| = p(p^2 - 1)/2. A deterministic sweep
    over small matrices runs first, then seeded random sampling.
    """
    if len(word.letters) == 0:
        raise ValueError("the identity word has no projective witness")
    used, letters = _used_generators(word)
    u = len(used)
    p = _next_prime(3 * len(word.letters) + 1)
    order = p * (p * p - 1) // 2

    def package(images):
        reps = tuple(_psl2_rep(m, p) for m in images)
        return ProjectiveWitness(p, _expand_matrix_tuple(word, used, reps, p), order)

    pool = list(itertools.islice(_lex_sl2(p), sweep_size))
    for images in itertools.product(pool, repeat=u):
        if not _word_is_projectively_trivial(letters, images, p):
            return package(images)
    rng = np.random.default_rng(seed)
    for _ in range(max_samples):
        images = tuple(_random_sl2(rng, p) for _ in range(u))
        if not _word_is_projectively_trivial(letters, images, p):
            return package(images)
    raise RuntimeError(f"no witness found in PSL2(F_{p}) for {word!r}")


def _random_sl2(rng, p: int) -> tuple[int, int, int, int]:
    while True:
        a, b, c, d = (int(v) for v in rng.integers(0, p, size=4))
        if (a * d - b * c) % p == 1:
            return (a, b, c, d)


def _expand_matrix_tuple(word, used, reps, p):
    ident = (1, 0, 0, 1)
    full = [ident] * word.rank
    for g, m in zip(used, reps):
        full[g] = m
    return tuple(full)
