"""Permutations on 0..degree-1 as tuples, with cycle-notation text format.

A permutation p maps point i to p[i]; compose(p, q) applies p first, then
q. This left-to-right convention is used everywhere groups act on points.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Sequence

CLOSURE_CAP = 1_000_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def check_perm(perm: Sequence[int], degree: int) -> tuple[int, ...]:
    p = tuple(int(v) for v in perm)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise ValueError(f"not a permutation of 0..{degree - 1}: {perm!r}")
    return p


def identity_perm(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Apply p, then q."""
    return tuple(q[v] for v in p)


def inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_order(p: Sequence[int]) -> int:
    order = 1
    q = tuple(p)
    ident = identity_perm(len(p))
    while q != ident:
        q = compose(q, p)
        order += 1
    return order


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation like '(0 1 2)(3 4)'; '()' is the identity."""
    outside = _CYCLE_RE.sub("", text)
    if outside.strip() or "(" in outside or ")" in outside:
        raise ValueError(f"malformed cycle notation: {text!r}")
    if not _CYCLE_RE.search(text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    out = list(range(degree))
    seen: set[int] = set()
    for m in _CYCLE_RE.finditer(text):
        body = m.group(1).split()
        if not body:
            continue
        pts = [int(v) for v in body]
        for v in pts:
            if not 0 <= v < degree:
                raise ValueError(f"point {v} out of range for degree {degree}")
            if v in seen:
                raise ValueError(f"point {v} repeated in {text!r}")
            seen.add(v)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            out[a] = b
    return tuple(out)


def format_cycles(perm: Sequence[int]) -> str:
    """Cycle notation with fixed points omitted; identity renders as '()'."""
    n = len(perm)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        v = perm[start]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = perm[v]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "()"


def closure(
    generators: Iterable[Sequence[int]], degree: int, cap: int = CLOSURE_CAP
) -> list[tuple[int, ...]]:
    """BFS closure from the identity; deterministic discovery order."""
    gens = [check_perm(g, degree) for g in generators]
    ident = identity_perm(degree)
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = compose(cur, g)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ValueError(f"closure exceeded cap of {cap} elements")
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def orbit(perms: Iterable[Sequence[int]], point: int) -> set[int]:
    ps = list(perms)
    seen = {point}
    queue = deque([point])
    while queue:
        v = queue.popleft()
        for p in ps:
            w = p[v]
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen
