"""Vectorized numpy variant of the pair scan, used by the numpy backend."""

import numpy as np


def law_scan_pairs_numpy(table, inv, letters, xs):
    """Same contract as sources.law_scan_pairs, vectorized over y per x."""
    n = table.shape[0]
    ys = np.arange(n)
    iys = inv[ys]
    for x in xs:
        ix = inv[x]
        states = np.zeros(n, dtype=np.int64)
        for c in letters:
            if c == 1:
                states = table[states, x]
            elif c == -1:
                states = table[states, ix]
            elif c == 2:
                states = table[states, ys]
            else:
                states = table[states, iys]
        bad = np.nonzero(states)[0]
        if bad.size:
            return int(x) * n + int(bad[0])
    return -1
