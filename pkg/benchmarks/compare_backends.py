"""Time the numba kernel lane against the pure numpy/Python fallback.

Run from the repo root:

    python3 benchmarks/compare_backends.py [--repeat N]

Each workload is executed once per lane to warm caches (and trigger jit
compilation), then timed over --repeat runs; the table reports the best run
per lane, which is the fairest number for short kernels.
"""

import argparse
import time

import numpy as np

from resfin import _kernels, power, sl2, word_from_text
from resfin.words import reduced_letter_seqs

IMPLS = _kernels.implementations()


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workload_reduce(lane):
    rng = np.random.default_rng(0)
    raw = rng.integers(1, 5, size=2_000_000).astype(np.int8)
    raw *= rng.choice(np.array([-1, 1], np.int8), size=raw.size)
    kernel = lane["reduce_letters"]
    return lambda: kernel(raw.copy())


def workload_law_scan(lane):
    group = sl2(7)  # order 336, table-backed
    table = np.ascontiguousarray(group.table, dtype=np.int32)
    inv = np.ascontiguousarray(group.inverses, dtype=np.int32)
    # [x,y]^168 is a law of SL2(F7) (168 = exponent), so the scan never
    # exits early and every one of the 336^2 pairs walks all 672 letters
    law = power(word_from_text("[x,y]"), 168)
    letters = np.ascontiguousarray(law.letters)
    xs = np.arange(group.order, dtype=np.int64)
    kernel = lane["law_scan_pairs"]
    return lambda: kernel(table, inv, letters, xs)


def workload_coset(lane):
    words = [np.array(seq, np.int8) for seq in reduced_letter_seqs(2, 9)]
    words = words[::97]  # a spread of 68 words
    kernel = lane["coset_feasible"]

    def run():
        for letters in words:
            m = 2
            while not kernel(letters, 2, m):
                m += 1

    return run


def workload_enumerate(lane):
    out = np.zeros((256, 100), dtype=np.int8)
    kernel = lane["enumerate_tables"]
    return lambda: kernel(10, out)


WORKLOADS = [
    ("reduce_letters (2M letters)", workload_reduce),
    ("law_scan_pairs (full scan, SL2(F7))", workload_law_scan),
    ("coset_feasible (68 length-9 words)", workload_coset),
    ("enumerate_tables (order 10)", workload_enumerate),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'workload':<36} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for label, make in WORKLOADS:
        results = {}
        for name in ("numpy", "numba"):
            fn = make(IMPLS[name])
            fn()  # warm-up / jit compile
            results[name] = best_of(fn, args.repeat)
        ratio = results["numpy"] / results["numba"]
        print(
            f"{label:<36} {results['numpy']:>9.4f}s {results['numba']:>9.4f}s"
            f" {ratio:>8.1f}x"
        )


if __name__ == "__main__":
    main()
