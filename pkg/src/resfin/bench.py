"""Benchmarks: law verification rows and detection-growth sweeps.

bench_law_words produces one row per n: the commutator law word for n is
checked to be a law in every catalog group of order up to n^2 // 9, so
each row is a certified lower-bound datapoint: detecting that word needs
a group bigger than n^2 // 9 while its length is at most 4n^2 (n + 1).

bench_growth sweeps all reduced two-generator words up to a length cap
(through their cyclic/symmetry representatives, which preserve detection
order) and reports the running maximum detection order per length. Work
is split across threads; the merge is order-independent, so results do
not depend on the thread count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .catalog import Catalog
from .detect import detection_order, is_law
from .laws import law_word
from .words import Word, canonical_cyclic_words, letter_sort_key, render

GROWTH_LENGTH_CAP = 10


@dataclass(frozen=True)
class LawRow:
    n: int
    length: int
    length_bound: int
    order_bound: int
    checked_to: int
    law_ok: bool
    elapsed: float

    def record(self) -> dict:
        return {
            "n": self.n,
            "length": self.length,
            "length_bound": self.length_bound,
            "order_bound": self.order_bound,
            "checked_to": self.checked_to,
            "law_ok": str(self.law_ok).lower(),
            "claim": f"F({self.length_bound})>{self.order_bound}",
            "elapsed": f"{self.elapsed:.3f}",
        }


@dataclass(frozen=True)
class GrowthRow:
    length: int
    words: int
    max_k: int
    argmax: Word
    undetected: int
    conclusive: bool
    elapsed: float

    def record(self) -> dict:
        return {
            "length": self.length,
            "words": self.words,
            "max_k": self.max_k,
            "argmax": render(self.argmax),
            "undetected": self.undetected,
            "conclusive": str(self.conclusive).lower(),
            "elapsed": f"{self.elapsed:.3f}",
        }


def bench_law_words(catalog: Catalog, ns: list[int]) -> list[LawRow]:
    """Verify the law word for each n against the catalog and emit rows.

    The order bound n^2 // 9 must not exceed the catalog, otherwise the
    check would be silently partial.
    """
    rows = []
    for n in ns:
        bound = n * n // 9
        if bound > catalog.max_order:
            raise ValueError(
                f"n={n}: order bound {bound} exceeds catalog {catalog.max_order}"
            )
        start = time.perf_counter()
        recipe = law_word(n)
        ok = all(
            is_law(entry.group, recipe.word) for entry in catalog.up_to(bound)
        )
        rows.append(
            LawRow(
                n=n,
                length=len(recipe.word.letters),
                length_bound=recipe.length_bound,
                order_bound=bound,
                checked_to=bound,
                law_ok=ok,
                elapsed=time.perf_counter() - start,
            )
        )
    return rows


def _growth_scan_chunk(words: list[Word], catalog: Catalog):
    best_k = 0
    best_word = None
    undetected = 0
    for w in words:
        res = detection_order(w, catalog)
        if res.min_order is None:
            undetected += 1
        elif res.min_order > best_k:
            best_k = res.min_order
            best_word = w
    return best_k, best_word, undetected


def bench_growth(
    catalog: Catalog, max_len: int = GROWTH_LENGTH_CAP, threads: int = 1
) -> list[GrowthRow]:
    """Running maximum detection order over words of length <= L, per L."""
    if not 1 <= max_len <= GROWTH_LENGTH_CAP:
        raise ValueError(f"length cap must lie in 1..{GROWTH_LENGTH_CAP}")
    if threads < 1:
        raise ValueError("threads must be positive")
    rows: list[GrowthRow] = []
    running_k = 0
    running_arg: Word | None = None
    for length in range(1, max_len + 1):
        start = time.perf_counter()
        reps = canonical_cyclic_words(2, length)
        if threads == 1 or len(reps) < 4 * threads:
            parts = [_growth_scan_chunk(reps, catalog)]
        else:
            chunks = [reps[i::threads] for i in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(
                    pool.map(lambda ws: _growth_scan_chunk(ws, catalog), chunks)
                )
        undetected = sum(part[2] for part in parts)
        for part_k, part_word, _ in parts:
            if part_word is None:
                continue
            better = part_k > running_k
            tie = part_k == running_k and running_arg is not None
            if better or (tie and _word_key(part_word) < _word_key(running_arg)):
                running_k = part_k
                running_arg = part_word
        rows.append(
            GrowthRow(
                length=length,
                words=len(reps),
                max_k=running_k,
                argmax=running_arg,
                undetected=undetected,
                conclusive=undetected == 0 and (not rows or rows[-1].conclusive),
                elapsed=time.perf_counter() - start,
            )
        )
    return rows


def _word_key(w: Word):
    return letter_sort_key([int(l) for l in w.letters])
