"""Free-group words over a finite rank: reduction, algebra, enumeration.

Letters are signed generator indices: +i is generator i, -i its inverse,
with indices 1..rank. Generator 1 renders as x, 2 as y, 3 as z, 4 as w,
higher ones as g1, g2, ...; uppercase letters denote inverses. Words are
kept freely reduced at all times.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels

MAX_RANK = 127  # letters live in int8

_GEN_LETTERS = "xyzw"


def gen_name(i: int) -> str:
    """Display name of generator index i >= 1."""
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    if i <= 4:
        return _GEN_LETTERS[i - 1]
    return f"g{i - 4}"


def gen_index(name: str) -> int:
    """Inverse of gen_name: x..w are 1..4, g<k>/G<k> is 4+k."""
    low = name.lower()
    if len(low) > 1 and low[0] == "g" and low[1:].isdigit() and int(low[1:]) >= 1:
        return 4 + int(low[1:])
    try:
        return _GEN_LETTERS.index(low) + 1
    except ValueError:
        raise ValueError(
            f"unknown generator name {name!r} (valid: x, y, z, w, g1, g2, ...)"
        ) from None


def _as_letter_array(letters: Iterable[int]) -> np.ndarray:
    arr = np.asarray(list(letters) if not isinstance(letters, np.ndarray) else letters)
    if arr.size == 0:
        return np.empty(0, np.int8)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("letters must be integers")
    if (arr == 0).any():
        raise ValueError("letter 0 is not a generator")
    hi = int(np.abs(arr).max())
    if hi > MAX_RANK:
        raise ValueError(f"generator index {hi} exceeds the supported rank {MAX_RANK}")
    return arr.astype(np.int8)


class Word:
    """An immutable, freely reduced word in the free group of a given rank."""

    __slots__ = ("rank", "_letters")

    def __init__(self, letters: Iterable[int] = (), rank: int | None = None):
        arr = _as_letter_array(letters)
        if rank is None and arr.size:
            # infer from the raw input: xX is a word about x even though it
            # reduces away, so cancellation must not shrink the rank
            rank = int(np.abs(arr).max())
        arr = _kernels.reduce_letters(arr)
        self._finish(arr, rank)

    def _finish(self, arr: np.ndarray, rank: int | None) -> None:
        used = int(np.abs(arr).max()) if arr.size else 0
        if rank is None:
            rank = used
        elif rank < used:
            raise ValueError(f"rank {rank} below highest generator used ({used})")
        if rank > MAX_RANK:
            raise ValueError(f"rank {rank} exceeds the supported maximum {MAX_RANK}")
        arr.flags.writeable = False
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_letters", arr)

    @classmethod
    def _from_reduced(cls, arr: np.ndarray, rank: int | None = None) -> "Word":
        """Trusted constructor: arr must already be reduced int8."""
        w = cls.__new__(cls)
        w._finish(arr, rank)
        return w

    @property
    def letters(self) -> np.ndarray:
        return self._letters

    def __len__(self) -> int:
        return self._letters.size

    def is_identity(self) -> bool:
        return self._letters.size == 0

    def with_rank(self, rank: int) -> "Word":
        return Word._from_reduced(self._letters, rank)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and np.array_equal(
            self._letters, other._letters
        )

    def __hash__(self) -> int:
        return hash((self.rank, self._letters.tobytes()))

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"Word({render(self)!r}, rank={self.rank})"


def reduce(letters: Iterable[int], rank: int | None = None) -> Word:
    """Freely reduce a raw signed-letter sequence into a Word."""
    return Word(letters, rank)


def multiply(u: Word, v: Word) -> Word:
    """Product with exact cancellation at the junction of two reduced words."""
    a, b = u.letters, v.letters
    t = 0
    m = min(a.size, b.size)
    if m:
        neq = a[a.size - 1 :: -1][:m] != -b[:m]
        t = int(np.argmax(neq)) if neq.any() else m
    arr = np.concatenate([a[: a.size - t], b[t:]])
    return Word._from_reduced(arr, max(u.rank, v.rank))


def invert(w: Word) -> Word:
    arr = (-w.letters[::-1]).astype(np.int8)
    return Word._from_reduced(arr, w.rank)


def conjugate(u: Word, v: Word) -> Word:
    """u^v = v^-1 u v."""
    return multiply(multiply(invert(v), u), v)


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v."""
    return multiply(multiply(invert(u), invert(v)), multiply(u, v))


def power(w: Word, e: int) -> Word:
    """w**e by repeated squaring (e may be negative)."""
    if e < 0:
        return power(invert(w), -e)
    result = Word._from_reduced(np.empty(0, np.int8), w.rank)
    base = w
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def generator(i: int, rank: int | None = None) -> Word:
    """The one-letter word for signed generator index i (1 = x, -1 = x inverse)."""
    return Word([i], rank)


def exponent_sums(w: Word) -> tuple[int, ...]:
    """Image of w in the abelianization Z^rank."""
    sums = np.zeros(w.rank, np.int64)
    arr = w.letters
    np.add.at(sums, np.abs(arr) - 1, np.sign(arr))
    return tuple(int(s) for s in sums)


def render(w: Word, max_run: int = 4) -> str:
    """Expression-syntax string; runs longer than max_run compress to powers."""
    arr = w.letters
    if arr.size == 0:
        return "1"
    parts = []
    i = 0
    n = arr.size
    while i < n:
        c = int(arr[i])
        j = i
        while j < n and int(arr[j]) == c:
            j += 1
        run = j - i
        g = abs(c)
        name = gen_name(g)
        if g > 4:
            # multi-character names always need explicit powers
            e = run if c > 0 else -run
            parts.append(name if e == 1 else f"{name}^{e}")
        else:
            letter = name if c > 0 else name.upper()
            if run > max_run:
                parts.append(f"{letter}^{run}")
            else:
                parts.append(letter * run)
        i = j
    return "".join(parts)


# --- enumeration and symmetry canonicalization -------------------------------

def reduced_letter_seqs(rank: int, length: int) -> Iterator[tuple[int, ...]]:
    """All freely reduced letter tuples of exactly the given length."""
    if length == 0:
        yield ()
        return
    alphabet = [i for g in range(1, rank + 1) for i in (g, -g)]
    stack: list[tuple[tuple[int, ...], int]] = [((c,), c) for c in alphabet]
    while stack:
        word, last = stack.pop()
        if len(word) == length:
            yield word
            continue
        for c in alphabet:
            if c != -last:
                stack.append((word + (c,), c))


def is_cyclically_reduced(letters: Sequence[int]) -> bool:
    return len(letters) <= 1 or letters[0] != -letters[-1]


def _letter_transforms(rank: int) -> list[dict[int, int]]:
    """Signed generator permutations: all maps g_i -> g_{pi(i)}^{+-1}."""
    maps = []
    for perm in itertools.permutations(range(1, rank + 1)):
        for signs in itertools.product((1, -1), repeat=rank):
            m = {}
            for g in range(1, rank + 1):
                img = signs[g - 1] * perm[g - 1]
                m[g] = img
                m[-g] = -img
            maps.append(m)
    return maps


def symmetry_orbit(letters: tuple[int, ...], transforms) -> Iterator[tuple[int, ...]]:
    """Orbit under signed permutations, inversion, and cyclic rotation."""
    n = len(letters)
    inverse = tuple(-c for c in reversed(letters))
    for base in (letters, inverse):
        for m in transforms:
            mapped = tuple(m[c] for c in base)
            for r in range(n if n else 1):
                yield mapped[r:] + mapped[:r]


def letter_sort_key(letters: Sequence[int]) -> tuple:
    """Order words by length, then letterwise with x < X < y < Y < ..."""
    return (len(letters), tuple((abs(c), c < 0) for c in letters))


def canonical_rep(letters: tuple[int, ...], transforms) -> tuple[int, ...]:
    return min(symmetry_orbit(letters, transforms), key=letter_sort_key)


def canonical_cyclic_words(rank: int, length: int) -> list[Word]:
    """Cyclically reduced words of exact length, one per symmetry class.

    Detection order and law-ness are invariant under inversion, cyclic
    rotation, and signed generator permutations, so one representative per
    orbit suffices for exhaustive sweeps.
    """
    transforms = _letter_transforms(rank)
    seen: set[tuple[int, ...]] = set()
    reps = []
    for letters in reduced_letter_seqs(rank, length):
        if not is_cyclically_reduced(letters) or letters in seen:
            continue
        orbit = set(symmetry_orbit(letters, transforms))
        seen.update(orbit)
        reps.append(min(orbit, key=letter_sort_key))
    reps.sort(key=letter_sort_key)
    return [Word._from_reduced(np.array(r, np.int8), rank) for r in reps]


def random_reduced_word(rng: np.random.Generator, length: int, rank: int = 2) -> Word:
    """Uniform-ish random reduced word of exactly the given length."""
    if length == 0:
        return Word((), rank)
    alphabet = [i for g in range(1, rank + 1) for i in (g, -g)]
    letters = [alphabet[rng.integers(len(alphabet))]]
    while len(letters) < length:
        c = alphabet[rng.integers(len(alphabet))]
        if c != -letters[-1]:
            letters.append(c)
    return Word._from_reduced(np.array(letters, np.int8), rank)
