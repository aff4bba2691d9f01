"""Complete catalogs of small groups.

Orders up to 12 are enumerated from scratch: a backtracking kernel emits
every multiplication table in a pruned labeling class, tables are grouped
by their element-order profiles, and each class representative is matched
against an independently constructed named group. The match must be a
bijection, so a missed or merged isomorphism class fails the build rather
than producing a quietly wrong catalog. Orders 13..16 come from the named
constructions directly.

Catalog ids are o<order>-<index> with index starting at 1 inside each
order, after sorting by descending element-order profile and then by
table bytes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels as kernels
from .constructions import named_groups_through_order
from .groups import FiniteGroup, from_cayley_table, from_perm_generators, psl2, sl2

ENUMERATION_CAP = 12
_RAW_TABLE_SANITY_CAP = 1 << 22

CLASSICAL_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14,
}


# -- isomorphism ----------------------------------------------------------


def _order_profile(group: FiniteGroup) -> tuple[int, ...]:
    return tuple(sorted(group.element_order(x) for x in range(group.order)))


def _is_abelian(group: FiniteGroup) -> bool:
    if group.table is not None:
        return bool(np.array_equal(group.table, group.table.T))
    return all(
        group.mul(a, b) == group.mul(b, a)
        for a in group.generators
        for b in group.generators
    )


def _bfs_expressions(group: FiniteGroup) -> tuple[list[int], list[int], list[int]]:
    """Discovery order, parent and generator index for each element.

    Walks right multiplication by the generators from the identity, so
    element e = parent(e) * gen(via(e)) and parents precede children.
    """
    n = group.order
    parent = [-1] * n
    via = [-1] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    queue = [0]
    while queue:
        cur = queue.pop(0)
        for k, g in enumerate(group.generators):
            nxt = group.mul(cur, g)
            if not seen[nxt]:
                seen[nxt] = True
                parent[nxt] = cur
                via[nxt] = k
                order.append(nxt)
                queue.append(nxt)
    if len(order) != n:
        raise AssertionError("generators do not generate the group")
    return order, parent, via


def isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    """Exact isomorphism test by generator-image search."""
    if g.order != h.order:
        return False
    if _is_abelian(g) != _is_abelian(h):
        return False
    if _order_profile(g) != _order_profile(h):
        return False
    if g.order == 1:
        return True
    disc, parent, via = _bfs_expressions(g)
    gen_orders = [g.element_order(x) for x in g.generators]
    h_orders = [h.element_order(y) for y in range(h.order)]
    candidates = [
        [y for y in range(h.order) if h_orders[y] == o] for o in gen_orders
    ]
    g_table = g.table
    use_numpy = g_table is not None and h.table is not None
    for images in itertools.product(*candidates):
        phi = [0] * g.order
        for e in disc[1:]:
            phi[e] = h.mul(phi[parent[e]], images[via[e]])
        if len(set(phi)) != g.order:
            continue
        if use_numpy:
            arr = np.array(phi, dtype=np.int64)
            if np.array_equal(h.table[arr[:, None], arr[None, :]], arr[g_table]):
                return True
        else:
            if all(
                phi[g.mul(a, b)] == h.mul(phi[a], phi[b])
                for a in range(g.order)
                for b in range(g.order)
            ):
                return True
    return False


# -- enumeration ----------------------------------------------------------


def _enumerate_raw_tables(n: int) -> np.ndarray:
    cap = 1 << 10
    while True:
        out = np.zeros((cap, n * n), dtype=np.int8)
        count = kernels.enumerate_tables(n, out)
        if count >= 0:
            return out[:count].reshape(count, n, n)
        if cap >= _RAW_TABLE_SANITY_CAP:
            raise RuntimeError(f"table enumeration at order {n} exceeded sanity cap")
        cap *= 2


def _bulk_order_profiles(tables: np.ndarray) -> np.ndarray:
    """Sorted element orders per table, computed by batched powering."""
    count, n, _ = tables.shape
    flat = tables.reshape(count, n * n).astype(np.int64)
    col = np.arange(n, dtype=np.int64)
    cur = np.tile(col, (count, 1))
    orders = np.ones((count, n), dtype=np.int64)
    done = cur == 0
    for k in range(2, n + 1):
        cur = np.take_along_axis(flat, cur * n + col, axis=1)
        newly = (cur == 0) & ~done
        orders[newly] = k
        done |= newly
    if not done.all():
        raise AssertionError("element order exceeded group order")
    return np.sort(orders, axis=1)


def enumerate_groups(max_order: int) -> dict[int, list[FiniteGroup]]:
    """One named representative per isomorphism class, orders 1..max_order.

    Raises if the enumerated classes fail to match the independent named
    constructions one for one.
    """
    if not 1 <= max_order <= ENUMERATION_CAP:
        raise ValueError(f"enumeration supports orders 1..{ENUMERATION_CAP}")
    named = named_groups_through_order(max_order)
    result: dict[int, list[FiniteGroup]] = {}
    for n in range(1, max_order + 1):
        tables = _enumerate_raw_tables(n)
        profiles = _bulk_order_profiles(tables)
        _, first = np.unique(profiles, axis=0, return_index=True)
        reps = [from_cayley_table(tables[i]) for i in sorted(first.tolist())]
        pool = list(named[n])
        groups = []
        for rep in reps:
            matches = [cand for cand in pool if isomorphic(rep, cand)]
            if len(matches) != 1:
                raise RuntimeError(
                    f"order {n}: enumerated class matched {len(matches)} named groups"
                )
            pool.remove(matches[0])
            rep.name = matches[0].name
            groups.append(rep)
        if pool:
            missing = ", ".join(cand.name for cand in pool)
            raise RuntimeError(f"order {n}: enumeration missed {missing}")
        result[n] = groups
    return result


def handcoded_extension(max_order: int = 16) -> dict[int, list[FiniteGroup]]:
    """Named groups for orders 13..max_order (at most 16)."""
    if not 13 <= max_order <= 16:
        raise ValueError("extension covers orders 13..16")
    named = named_groups_through_order(max_order)
    return {n: named[n] for n in range(13, max_order + 1)}


# -- the catalog ----------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    group: FiniteGroup


@dataclass
class Catalog:
    max_order: int
    entries: list[CatalogEntry]

    def get(self, entry_id: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        raise KeyError(entry_id)

    def up_to(self, bound: int) -> Iterator[CatalogEntry]:
        for entry in self.entries:
            if entry.group.order <= bound:
                yield entry

    def __len__(self) -> int:
        return len(self.entries)


def _catalog_sort_key(group: FiniteGroup):
    profile = sorted(
        (group.element_order(x) for x in range(group.order)), reverse=True
    )
    blob = group.table.tobytes() if group.table is not None else b""
    return (tuple(-o for o in profile), blob)


def build_catalog(max_order: int = 16) -> Catalog:
    if not 1 <= max_order <= 16:
        raise ValueError("catalog orders run 1..16")
    per_order = enumerate_groups(min(max_order, ENUMERATION_CAP))
    if max_order > ENUMERATION_CAP:
        per_order.update(handcoded_extension(max_order))
    entries = []
    for n in sorted(per_order):
        ranked = sorted(per_order[n], key=_catalog_sort_key)
        for i, group in enumerate(ranked, start=1):
            entries.append(CatalogEntry(f"o{n}-{i}", group))
    return Catalog(max_order, entries)


# -- persistence ----------------------------------------------------------


def save_catalog(catalog: Catalog, path: str) -> None:
    lines = [f"catalog max_order {catalog.max_order} entries {len(catalog.entries)}"]
    for entry in catalog.entries:
        g = entry.group
        lines.append(f"group {g.name} order {g.order} kind {g.kind}")
        if g.kind == "cayley":
            for row in g.table:
                lines.append(" ".join(str(int(v)) for v in row))
        elif g.kind == "perm":
            lines.append(f"degree {g.degree} gens {len(g.generators)}")
            for gi in g.generators:
                lines.append(_format_perm(g, gi))
        else:
            lines.append(f"p {g.p}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _format_perm(group: FiniteGroup, index: int) -> str:
    from . import perms as pm

    return pm.format_cycles(group.perm_elements[index])


class CatalogFormatError(ValueError):
    pass


def load_catalog(path: str) -> Catalog:
    with open(path, encoding="ascii") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise CatalogFormatError("empty catalog file")
    header = lines[0].split()
    if (
        len(header) != 5
        or header[0] != "catalog"
        or header[1] != "max_order"
        or header[3] != "entries"
    ):
        raise CatalogFormatError(f"bad header: {lines[0]!r}")
    max_order = int(header[2])
    expected_entries = int(header[4])
    pos = 1
    groups: list[FiniteGroup] = []
    while pos < len(lines):
        head = lines[pos].split()
        if len(head) != 6 or head[0] != "group" or head[2] != "order" or head[4] != "kind":
            raise CatalogFormatError(f"bad group line: {lines[pos]!r}")
        name, order, kind = head[1], int(head[3]), head[5]
        pos += 1
        if kind == "cayley":
            rows = []
            for _ in range(order):
                rows.append([int(v) for v in lines[pos].split()])
                pos += 1
            group = from_cayley_table(np.array(rows, dtype=np.int32), name)
        elif kind == "perm":
            sub = lines[pos].split()
            if len(sub) != 4 or sub[0] != "degree" or sub[2] != "gens":
                raise CatalogFormatError(f"bad perm header: {lines[pos]!r}")
            degree, ngens = int(sub[1]), int(sub[3])
            pos += 1
            cycles = lines[pos : pos + ngens]
            pos += ngens
            group = from_perm_generators(cycles, degree, name)
        elif kind in ("sl2", "psl2"):
            sub = lines[pos].split()
            if len(sub) != 2 or sub[0] != "p":
                raise CatalogFormatError(f"bad prime line: {lines[pos]!r}")
            pos += 1
            group = (sl2 if kind == "sl2" else psl2)(int(sub[1]))
            group.name = name
        else:
            raise CatalogFormatError(f"unknown kind {kind!r}")
        if group.order != order:
            raise CatalogFormatError(
                f"{name}: declared order {order}, realized {group.order}"
            )
        groups.append(group)
    if len(groups) != expected_entries:
        raise CatalogFormatError(
            f"header claims {expected_entries} entries, found {len(groups)}"
        )
    return _assemble_validated(max_order, groups)


def _assemble_validated(max_order: int, groups: list[FiniteGroup]) -> Catalog:
    by_order: dict[int, list[FiniteGroup]] = {}
    last_order = 0
    for g in groups:
        if g.order < last_order:
            raise CatalogFormatError("groups are not sorted by ascending order")
        last_order = g.order
        by_order.setdefault(g.order, []).append(g)
    missing = [n for n in range(1, max_order + 1) if n not in by_order]
    if missing:
        raise CatalogFormatError(f"catalog is missing orders {missing}")
    entries = []
    for n in sorted(by_order):
        block = by_order[n]
        keys = [_catalog_sort_key(g) for g in block]
        if keys != sorted(keys):
            raise CatalogFormatError(f"order {n}: entries not in catalog sort order")
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                if isomorphic(block[a], block[b]):
                    raise CatalogFormatError(
                        f"order {n}: duplicate isomorphism class"
                    )
        if n <= 16 and n <= max_order and len(block) != CLASSICAL_GROUP_COUNTS[n]:
            raise CatalogFormatError(
                f"order {n}: expected {CLASSICAL_GROUP_COUNTS[n]} classes, "
                f"found {len(block)}"
            )
        for i, g in enumerate(block, start=1):
            entries.append(CatalogEntry(f"o{n}-{i}", g))
    return Catalog(max_order, entries)
