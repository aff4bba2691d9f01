"""Kernel source functions.

Everything here is written in the restricted style numba's nopython mode
accepts (numpy arrays, ints, no dicts/objects), so the same source serves
both backends: the numba lane wraps these with @njit, the numpy lane calls
them as plain Python.
"""

import numpy as np


def reduce_letters(raw):
    """Freely reduce a signed-letter array; returns a fresh reduced array."""
    out = np.empty(raw.size, np.int8)
    top = 0
    for i in range(raw.size):
        c = raw[i]
        if top > 0 and out[top - 1] == -c:
            top -= 1
        else:
            out[top] = c
            top += 1
    return out[:top].copy()


def law_scan_pairs(table, inv, letters, xs):
    """Scan (x, y) pairs for a non-identity value of a rank-2 word.

    table: (n, n) int32 multiplication table with identity 0.
    letters: word as int8 values in {1, -1, 2, -2}.
    xs: first-coordinate candidates (conjugacy-class representatives).
    Returns x * n + y for the first counterexample, -1 if none.
    """
    n = table.shape[0]
    L = letters.size
    for idx in range(xs.size):
        x = xs[idx]
        ix = inv[x]
        for y in range(n):
            iy = inv[y]
            s = 0
            for t in range(L):
                c = letters[t]
                if c == 1:
                    g = x
                elif c == -1:
                    g = ix
                elif c == 2:
                    g = y
                else:
                    g = iy
                s = table[s, g]
            if s != 0:
                return x * n + y
    return -1


def coset_feasible(letters, k, m):
    """Test whether some degree-m coset table sends the word's path off base.

    Depth-first search over partial injective transition tables for k
    generators on m points, tracing the word from point 0 and materializing
    only points the path touches; new points are allocated densely so
    symmetric branches collapse. True iff an assignment ends anywhere != 0,
    i.e. the word lies outside some subgroup of index <= m.
    """
    L = letters.size
    fwd = np.full((k + 1, m), -1, np.int64)
    bwd = np.full((k + 1, m), -1, np.int64)
    vert = np.zeros(L + 1, np.int64)
    state = np.full(L, -2, np.int64)  # -2 fresh, -3 forced hop, else last target tried
    asave = np.zeros(L, np.int64)
    alloc = 1
    pos = 0
    while pos >= 0:
        if pos == L:
            if vert[L] != 0:
                return True
            pos -= 1
            continue
        g = letters[pos]
        v = vert[pos]
        a = g if g > 0 else -g
        if state[pos] == -2:
            if g > 0:
                t = fwd[a, v]
            else:
                t = bwd[a, v]
            if t >= 0:
                state[pos] = -3
                vert[pos + 1] = t
                pos += 1
                continue
            state[pos] = -1
            asave[pos] = alloc
        elif state[pos] == -3:
            state[pos] = -2
            pos -= 1
            continue
        else:
            u = state[pos]
            if g > 0:
                fwd[a, v] = -1
                bwd[a, u] = -1
            else:
                bwd[a, v] = -1
                fwd[a, u] = -1
            alloc = asave[pos]
        found = -1
        u = state[pos] + 1
        while u < alloc:
            if g > 0:
                if bwd[a, u] < 0:
                    found = u
                    break
            else:
                if fwd[a, u] < 0:
                    found = u
                    break
            u += 1
        if found < 0 and alloc < m and state[pos] < alloc:
            found = alloc
        if found < 0:
            state[pos] = -2
            pos -= 1
            continue
        if g > 0:
            fwd[a, v] = found
            bwd[a, found] = v
        else:
            bwd[a, v] = found
            fwd[a, found] = v
        if found == alloc:
            alloc += 1
        state[pos] = found
        vert[pos + 1] = found
        pos += 1
    return False


def _table_set(T, rowmask, colmask, ta, tb, top, a, b, c):
    """Set T[a,b] = c with Latin-square checks; -1 on conflict."""
    cur = T[a, b]
    if cur == c:
        return top
    if cur >= 0:
        return -1
    bit = np.int64(1) << c
    if rowmask[a] & bit:
        return -1
    if colmask[b] & bit:
        return -1
    T[a, b] = c
    rowmask[a] |= bit
    colmask[b] |= bit
    ta[top] = a
    tb[top] = b
    return top + 1


def _undo_to(T, rowmask, colmask, ta, tb, top, base):
    while top > base:
        top -= 1
        a = ta[top]
        b = tb[top]
        c = T[a, b]
        T[a, b] = -1
        rowmask[a] &= ~(np.int64(1) << c)
        colmask[b] &= ~(np.int64(1) << c)
    return top


def _assign_propagate(T, rowmask, colmask, ta, tb, base, a0, b0, c0, n):
    """Assign T[a0,b0] = c0 and propagate associativity consequences.

    The trail doubles as the work queue: every fact recorded past `base`
    gets its two forward deduction rules fired. Returns the new trail top,
    or -1 with the trail restored to `base`.
    """
    top = _table_set(T, rowmask, colmask, ta, tb, base, a0, b0, c0)
    if top < 0:
        return -1
    idx = base
    while idx < top:
        a = ta[idx]
        b = tb[idx]
        c = T[a, b]
        idx += 1
        for z in range(1, n):
            q = T[b, z]
            if q >= 0:
                lhs = T[c, z]
                rhs = T[a, q]
                if lhs >= 0:
                    top2 = _table_set(T, rowmask, colmask, ta, tb, top, a, q, lhs)
                elif rhs >= 0:
                    top2 = _table_set(T, rowmask, colmask, ta, tb, top, c, z, rhs)
                else:
                    continue
                if top2 < 0:
                    _undo_to(T, rowmask, colmask, ta, tb, top, base)
                    return -1
                top = top2
        for x in range(1, n):
            p = T[x, a]
            if p >= 0:
                lhs = T[p, b]
                rhs = T[x, c]
                if lhs >= 0:
                    top2 = _table_set(T, rowmask, colmask, ta, tb, top, x, c, lhs)
                elif rhs >= 0:
                    top2 = _table_set(T, rowmask, colmask, ta, tb, top, p, b, rhs)
                else:
                    continue
                if top2 < 0:
                    _undo_to(T, rowmask, colmask, ta, tb, top, base)
                    return -1
                top = top2
    return top


def enumerate_tables(n, out):
    """Enumerate group multiplication tables of order n by backtracking.

    Identity is fixed at index 0; cells (i, j) with i, j >= 1 are filled
    row-major under Latin-square constraints with associativity deductions
    propagated after every choice. Row 1 carries the symmetry cut
    T[1][j] <= j+1 (every group admits such a labeling, so no isomorphism
    class is lost). Completed tables get a full O(n^3) associativity check
    before being emitted; isomorphic duplicates are the caller's problem.

    out: (cap, n*n) int8 buffer. Returns the table count, or -1 if cap hit.
    """
    cap = out.shape[0]
    count = 0
    if n == 1:
        if cap < 1:
            return -1
        out[0, 0] = 0
        return 1
    T = np.full((n, n), -1, np.int64)
    for j in range(n):
        T[0, j] = j
        T[j, 0] = j
    rowmask = np.zeros(n, np.int64)
    colmask = np.zeros(n, np.int64)
    full = (np.int64(1) << n) - 1
    rowmask[0] = full
    colmask[0] = full
    for i in range(1, n):
        rowmask[i] = np.int64(1) << i
        colmask[i] = np.int64(1) << i
    ncells = (n - 1) * (n - 1)
    ta = np.zeros(n * n, np.int64)
    tb = np.zeros(n * n, np.int64)
    top = 0
    fcell = np.zeros(ncells + 1, np.int64)
    fval = np.zeros(ncells + 1, np.int64)
    fbase = np.zeros(ncells + 1, np.int64)
    depth = 0
    fcell[0] = 0
    descend = True
    while depth >= 0:
        if descend:
            ptr = fcell[depth]
            while ptr < ncells:
                i = 1 + ptr // (n - 1)
                j = 1 + ptr % (n - 1)
                if T[i, j] < 0:
                    break
                ptr += 1
            fcell[depth] = ptr
            if ptr == ncells:
                ok = True
                for a in range(n):
                    if not ok:
                        break
                    for b in range(n):
                        if not ok:
                            break
                        ab = T[a, b]
                        for c in range(n):
                            if T[ab, c] != T[a, T[b, c]]:
                                ok = False
                                break
                if ok:
                    if count >= cap:
                        return -1
                    for a in range(n):
                        for b in range(n):
                            out[count, a * n + b] = T[a, b]
                    count += 1
                depth -= 1
                descend = False
                continue
            fval[depth] = -1
            fbase[depth] = top
        else:
            top = _undo_to(T, rowmask, colmask, ta, tb, top, fbase[depth])
        ptr = fcell[depth]
        i = 1 + ptr // (n - 1)
        j = 1 + ptr % (n - 1)
        vmax = n - 1
        if i == 1 and j + 1 < vmax:
            vmax = j + 1
        placed = False
        v = fval[depth] + 1
        while v <= vmax:
            bit = np.int64(1) << v
            if not (rowmask[i] & bit) and not (colmask[j] & bit):
                newtop = _assign_propagate(
                    T, rowmask, colmask, ta, tb, top, i, j, v, n
                )
                if newtop >= 0:
                    fval[depth] = v
                    top = newtop
                    depth += 1
                    fcell[depth] = ptr + 1
                    descend = True
                    placed = True
                    break
            v += 1
        if not placed:
            depth -= 1
            descend = False
    return count
