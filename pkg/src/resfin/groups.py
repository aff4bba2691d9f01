"""Finite groups with element indices, plus the normal-power machinery.

Elements of a group of order n are the indices 0..n-1 with 0 the identity.
Every group carries one of four realizations:

  - "cayley": an explicit multiplication table;
  - "perm":   permutations of 0..degree-1, closed under composition;
  - "sl2":    2x2 determinant-1 matrices over the prime field F_p;
  - "psl2":   the same matrices modulo sign, one representative per pair.

A full multiplication table is precomputed whenever order <= TABLE_CAP;
larger groups multiply through their realization on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import perms as pm

TABLE_CAP = 4096
PRIME_CAP = 23

_GROUP_KINDS = ("cayley", "perm", "sl2", "psl2")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteGroup:
    """A finite group over indices 0..order-1 with identity 0.

    Construct through from_cayley_table, from_perm_generators, sl2, or
    psl2; the bare constructor trusts its arguments.
    """

    __slots__ = (
        "order",
        "name",
        "kind",
        "table",
        "inverses",
        "generators",
        "degree",
        "perm_elements",
        "p",
        "matrices",
        "_index",
        "_class_reps",
    )

    def __init__(
        self,
        order: int,
        name: str,
        kind: str,
        *,
        table: np.ndarray | None = None,
        inverses: np.ndarray | None = None,
        generators: tuple[int, ...] = (),
        degree: int = 0,
        perm_elements: list[tuple[int, ...]] | None = None,
        p: int = 0,
        matrices: np.ndarray | None = None,
    ):
        if kind not in _GROUP_KINDS:
            raise ValueError(f"unknown group kind {kind!r}")
        self.order = order
        self.name = name
        self.kind = kind
        self.table = table
        self.inverses = inverses
        self.generators = generators
        self.degree = degree
        self.perm_elements = perm_elements
        self.p = p
        self.matrices = matrices
        self._index: dict | None = None
        self._class_reps: np.ndarray | None = None
        if self.inverses is None:
            self.inverses = self._compute_inverses()

    # -- core operations ------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        if self.table is not None:
            return int(self.table[i, j])
        if self.kind == "perm":
            prod = pm.compose(self.perm_elements[i], self.perm_elements[j])
            return self.index_of_perm(prod)
        m = _mat_mul(self.matrices[i], self.matrices[j], self.p)
        if self.kind == "psl2":
            m = _psl2_rep(m, self.p)
        return self.index_of_matrix(m)

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    def conjugate(self, x: int, g: int) -> int:
        """g^{-1} x g, matching the word convention u^v = v^{-1} u v."""
        return self.mul(self.mul(self.inv(g), x), g)

    def element_order(self, x: int) -> int:
        order = 1
        cur = x
        while cur != 0:
            cur = self.mul(cur, x)
            order += 1
        return order

    def power(self, x: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(x), -e)
        acc = 0
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def element_repr(self, i: int) -> str:
        if self.kind == "perm":
            return pm.format_cycles(self.perm_elements[i])
        if self.kind in ("sl2", "psl2"):
            a, b, c, d = (int(v) for v in self.matrices[i])
            return f"[[{a},{b}],[{c},{d}]]"
        return str(i)

    # -- realization lookups ---------------------------------------------

    def index_of_perm(self, perm: tuple[int, ...]) -> int:
        if self._index is None:
            self._index = {p: i for i, p in enumerate(self.perm_elements)}
        return self._index[perm]

    def index_of_matrix(self, mat: Sequence[int]) -> int:
        if self._index is None:
            self._index = {
                tuple(int(v) for v in row): i for i, row in enumerate(self.matrices)
            }
        return self._index[tuple(int(v) for v in mat)]

    def _compute_inverses(self) -> np.ndarray:
        if self.table is not None:
            return np.argmax(self.table == 0, axis=1).astype(np.int32)
        out = np.empty(self.order, dtype=np.int32)
        if self.kind == "perm":
            for i, perm in enumerate(self.perm_elements):
                out[i] = self.index_of_perm(pm.inverse_perm(perm))
            return out
        for i in range(self.order):
            a, b, c, d = (int(v) for v in self.matrices[i])
            m = (d % self.p, -b % self.p, -c % self.p, a % self.p)
            if self.kind == "psl2":
                m = _psl2_rep(m, self.p)
            out[i] = self.index_of_matrix(m)
        return out

    # -- derived structure -----------------------------------------------

    def conjugacy_class_reps(self) -> np.ndarray:
        """Minimal index of each conjugacy class, ascending.

        Classes are orbits under conjugation by the generators; closing
        under generators closes under the whole group.
        """
        if self._class_reps is not None:
            return self._class_reps
        unvisited = np.ones(self.order, dtype=bool)
        reps = []
        for start in range(self.order):
            if not unvisited[start]:
                continue
            reps.append(start)
            stack = [start]
            unvisited[start] = False
            while stack:
                x = stack.pop()
                for g in self.generators:
                    y = self.conjugate(x, g)
                    if unvisited[y]:
                        unvisited[y] = False
                        stack.append(y)
        self._class_reps = np.array(reps, dtype=np.int64)
        return self._class_reps

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order}, kind={self.kind!r})"


# -- constructors ---------------------------------------------------------


def _validate_table(table: np.ndarray) -> None:
    n = table.shape[0]
    if table.shape != (n, n):
        raise ValueError("multiplication table must be square")
    if table.min() < 0 or table.max() >= n:
        raise ValueError("table entries must lie in 0..order-1")
    ident = np.arange(n)
    if not (np.array_equal(table[0], ident) and np.array_equal(table[:, 0], ident)):
        raise ValueError("index 0 must be a two-sided identity")
    for i in range(n):
        if len(set(table[i].tolist())) != n or len(set(table[:, i].tolist())) != n:
            raise ValueError(f"row/column {i} is not a permutation")
    for a in range(n):
        lhs = table[table[a], :]
        rhs = table[a][table]
        if not np.array_equal(lhs, rhs):
            raise ValueError("multiplication table is not associative")


def _table_generating_set(table: np.ndarray) -> tuple[int, ...]:
    """Greedy generating set: adjoin the least element not yet generated."""
    n = table.shape[0]
    gens: list[int] = []
    reached = {0}
    for e in range(1, n):
        if e in reached:
            continue
        gens.append(e)
        frontier = [e]
        reached.add(e)
        while frontier:
            x = frontier.pop()
            for g in gens:
                for y in (int(table[x, g]), int(table[g, x])):
                    if y not in reached:
                        reached.add(y)
                        frontier.append(y)
    return tuple(gens)


def from_cayley_table(table, name: str = "") -> FiniteGroup:
    arr = np.asarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("multiplication table must be a square matrix")
    n = arr.shape[0]
    if n > TABLE_CAP:
        raise ValueError(f"explicit tables are capped at order {TABLE_CAP}")
    _validate_table(arr)
    return FiniteGroup(
        n,
        name or f"table-group-{n}",
        "cayley",
        table=arr,
        generators=_table_generating_set(arr),
    )


def from_perm_generators(
    generators: Iterable, degree: int, name: str = "", cap: int = pm.CLOSURE_CAP
) -> FiniteGroup:
    """Group generated by permutations, elements in BFS discovery order."""
    gens = []
    for g in generators:
        if isinstance(g, str):
            gens.append(pm.parse_cycles(g, degree))
        else:
            gens.append(pm.check_perm(g, degree))
    elements = pm.closure(gens, degree, cap)
    n = len(elements)
    index = {p: i for i, p in enumerate(elements)}
    gen_indices = tuple(index[g] for g in gens)
    table = None
    if n <= TABLE_CAP:
        table = np.empty((n, n), dtype=np.int32)
        for i, p in enumerate(elements):
            for j, q in enumerate(elements):
                table[i, j] = index[pm.compose(p, q)]
    group = FiniteGroup(
        n,
        name or f"perm-group-{n}",
        "perm",
        table=table,
        generators=gen_indices,
        degree=degree,
        perm_elements=elements,
    )
    group._index = index
    return group


def _mat_mul(m1, m2, p: int) -> tuple[int, int, int, int]:
    a1, b1, c1, d1 = (int(v) for v in m1)
    a2, b2, c2, d2 = (int(v) for v in m2)
    return (
        (a1 * a2 + b1 * c2) % p,
        (a1 * b2 + b1 * d2) % p,
        (c1 * a2 + d1 * c2) % p,
        (c1 * b2 + d1 * d2) % p,
    )


def _psl2_rep(m, p: int) -> tuple[int, int, int, int]:
    """Lexicographically smaller of m and -m."""
    a, b, c, d = (int(v) for v in m)
    neg = ((-a) % p, (-b) % p, (-c) % p, (-d) % p)
    return min((a, b, c, d), neg)


def sl2_matrices(p: int) -> np.ndarray:
    """All determinant-1 matrices over F_p as rows (a, b, c, d).

    Identity first, then ascending lexicographic order.
    """
    rows = []
    for a in range(1, p):
        a_inv = pow(a, p - 2, p)
        for b in range(p):
            for c in range(p):
                rows.append((a, b, c, (1 + b * c) * a_inv % p))
    for b in range(1, p):
        c = (-pow(b, p - 2, p)) % p
        for d in range(p):
            rows.append((0, b, c, d))
    rows.sort()
    ident = (1, 0, 0, 1)
    rows.remove(ident)
    rows.insert(0, ident)
    return np.array(rows, dtype=np.int64)


def psl2_matrices(p: int) -> np.ndarray:
    """Canonical representatives of SL2(F_p) modulo sign, identity first."""
    mats = sl2_matrices(p)
    if p == 2:
        return mats
    reps = sorted({_psl2_rep(m, p) for m in mats})
    ident = (1, 0, 0, 1)
    reps.remove(ident)
    reps.insert(0, ident)
    return np.array(reps, dtype=np.int64)


def _matrix_group(p: int, kind: str) -> FiniteGroup:
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not 2 <= p <= PRIME_CAP:
        raise ValueError(f"p must lie in 2..{PRIME_CAP}, got {p}")
    mats = sl2_matrices(p) if kind == "sl2" else psl2_matrices(p)
    n = mats.shape[0]
    index = {tuple(int(v) for v in row): i for i, row in enumerate(mats)}
    gen_mats = [(1, 1, 0, 1), (1, 0, 1, 1)]
    if kind == "psl2":
        gen_mats = [_psl2_rep(m, p) for m in gen_mats]
    gen_indices = tuple(index[m] for m in gen_mats)
    table = None
    if n <= TABLE_CAP:
        table = _matrix_table(mats, p, kind)
    group = FiniteGroup(
        n,
        f"SL2(F_{p})" if kind == "sl2" else f"PSL2(F_{p})",
        kind,
        table=table,
        generators=gen_indices,
        p=p,
        matrices=mats,
    )
    group._index = index
    return group


def _matrix_table(mats: np.ndarray, p: int, kind: str) -> np.ndarray:
    """Row-at-a-time table build; lexicographic packing keys the lookup."""
    n = mats.shape[0]
    packed = (((mats[:, 0] * p + mats[:, 1]) * p + mats[:, 2]) * p) + mats[:, 3]
    lookup = np.full(p**4, -1, dtype=np.int32)
    lookup[packed] = np.arange(n, dtype=np.int32)
    a, b, c, d = (mats[:, k] for k in range(4))
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        ai, bi, ci, di = (int(v) for v in mats[i])
        ra = (ai * a + bi * c) % p
        rb = (ai * b + bi * d) % p
        rc = (ci * a + di * c) % p
        rd = (ci * b + di * d) % p
        if kind == "psl2" and p != 2:
            neg = (((p - ra) % p * p + (p - rb) % p) * p + (p - rc) % p) * p + (
                p - rd
            ) % p
            pos = ((ra * p + rb) * p + rc) * p + rd
            key = np.minimum(pos, neg)
        else:
            key = ((ra * p + rb) * p + rc) * p + rd
        table[i] = lookup[key]
    return table


def sl2(p: int) -> FiniteGroup:
    """SL2 over the prime field F_p; order p(p^2 - 1)."""
    return _matrix_group(p, "sl2")


def psl2(p: int) -> FiniteGroup:
    """PSL2 over the prime field F_p; order p(p^2 - 1)/gcd(2, p - 1)."""
    return _matrix_group(p, "psl2")


# -- subgroups and the normal-power bound ---------------------------------


def cyclic_subgroup(group: FiniteGroup, x: int, step: int = 1) -> list[int]:
    """Elements of <x^step> in power order starting at the identity."""
    start = group.power(x, step)
    out = [0]
    cur = start
    while cur != 0:
        out.append(cur)
        cur = group.mul(cur, start)
    return out


def is_normal(group: FiniteGroup, subgroup: Iterable[int]) -> bool:
    """Whether the subgroup is closed under conjugation by the group.

    Conjugation by the generators suffices.
    """
    members = set(int(v) for v in subgroup)
    if 0 not in members:
        raise ValueError("subgroup must contain the identity 0")
    for g in group.generators:
        for s in members:
            if group.conjugate(s, g) not in members:
                return False
    return True


def lucchini_ell(group: FiniteGroup, x: int) -> int:
    """Least ell >= 1 with <x^ell> normal; ell = ord(x) always succeeds."""
    order_x = group.element_order(x)
    for ell in range(1, order_x + 1):
        if is_normal(group, cyclic_subgroup(group, x, ell)):
            return ell
    raise AssertionError("unreachable: the trivial subgroup is normal")


@dataclass(frozen=True)
class TransitiveAction:
    """A transitive action on 0..degree-1, one permutation per generator.

    The basepoint is 0; for a coset action it is the coset of the subgroup
    itself.
    """

    degree: int
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for p in self.perms:
            pm.check_perm(p, self.degree)
        if len(pm.orbit(self.perms, 0)) != self.degree:
            raise ValueError("action is not transitive")


def coset_action(group: FiniteGroup, subgroup: Iterable[int]) -> TransitiveAction:
    """Right-multiplication action on the right cosets of the subgroup.

    Cosets are numbered in BFS order from the subgroup itself (coset 0),
    expanding by the group generators in order.
    """
    members = sorted(set(int(v) for v in subgroup))
    if 0 not in members:
        raise ValueError("subgroup must contain the identity 0")
    for s in members:
        for t in members:
            if group.mul(s, t) not in members:
                raise ValueError("subgroup is not closed under multiplication")

    rep = np.full(group.order, -1, dtype=np.int64)
    coset_reps = [0]
    rep_of = {0: 0}
    for s in members:
        rep[s] = 0
    queue = [0]
    while queue:
        r = queue.pop(0)
        for g in group.generators:
            e = group.mul(r, g)
            if rep[e] < 0:
                idx = len(coset_reps)
                coset_reps.append(e)
                rep_of[e] = idx
                for s in members:
                    rep[group.mul(s, e)] = e
                queue.append(e)
    degree = len(coset_reps)
    if degree * len(members) != group.order:
        raise ValueError("coset decomposition failed; subgroup is not a subgroup")
    action_perms = []
    for g in group.generators:
        action_perms.append(
            tuple(rep_of[int(rep[group.mul(r, g)])] for r in coset_reps)
        )
    return TransitiveAction(degree, tuple(action_perms))


def verify_lucchini(action: TransitiveAction) -> bool:
    """Check the order bound on a transitive image with cyclic stabilizer.

    Closes the action permutations into the image group P, tests whether
    the stabilizer of 0 is cyclic, and if so checks |P| <= n^2 - n where
    n is the degree. Non-cyclic stabilizers pass vacuously.
    """
    n = action.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    image = pm.closure(action.perms, n)
    stab = [p for p in image if p[0] == 0]
    cyclic = any(pm.perm_order(p) == len(stab) for p in stab)
    if not cyclic:
        return True
    return len(image) <= n * n - n
