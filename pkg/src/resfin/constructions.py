"""Named small groups built from explicit formulas.

Each constructor returns a validated FiniteGroup. Formula groups list
their elements with the identity first and let the table validator check
associativity, so a wrong formula fails loudly at construction time.

Dihedral, quaternion and semidihedral groups are named by their order
(D8 is the dihedral group with 8 elements).
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .groups import FiniteGroup, from_cayley_table, from_perm_generators


def _formula_group(elements: Sequence, mul: Callable, name: str) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[mul(a, b)]
    return from_cayley_table(table, name)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    return _formula_group(
        list(range(n)), lambda a, b: (a + b) % n, f"Z{n}"
    )


def abelian(*factors: int) -> FiniteGroup:
    """Direct product of cyclic groups, named by its factors."""
    if not factors or any(f < 1 for f in factors):
        raise ValueError("factors must be positive integers")
    elements = [()]
    for f in factors:
        elements = [e + (v,) for e in elements for v in range(f)]
    elements.sort()

    def mul(a, b):
        return tuple((x + y) % f for x, y, f in zip(a, b, factors))

    return _formula_group(elements, mul, "x".join(f"Z{f}" for f in factors))


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even, >= 6) order."""
    if order < 6 or order % 2:
        raise ValueError("dihedral order must be an even number >= 6")
    n = order // 2
    elements = [(r, s) for r in range(n) for s in (0, 1)]

    def mul(a, b):
        r1, s1 = a
        r2, s2 = b
        return ((r1 + (r2 if s1 == 0 else -r2)) % n, s1 ^ s2)

    return _formula_group(elements, mul, f"D{order}")


def dicyclic(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = 2 * m
    elements = [(i, s) for i in range(n) for s in (0, 1)]

    def mul(a, b):
        i1, s1 = a
        i2, s2 = b
        if s1 == 0:
            return ((i1 + i2) % n, s2)
        if s2 == 0:
            return ((i1 - i2) % n, 1)
        return ((i1 - i2 + m) % n, 0)

    name = f"Q{4 * m}" if m & (m - 1) == 0 else f"Dic{m}"
    return _formula_group(elements, mul, name)


def quaternion(order: int) -> FiniteGroup:
    if order % 4 or order < 8:
        raise ValueError("quaternion order must be a multiple of 4, >= 8")
    return dicyclic(order // 4)


def _maximal_cyclic_16(multiplier: int, name: str) -> FiniteGroup:
    """Order 16 with a^8 = b^2 = 1 and b a b^-1 = a^multiplier."""
    elements = [(i, s) for i in range(8) for s in (0, 1)]

    def mul(a, b):
        i1, s1 = a
        i2, s2 = b
        return ((i1 + i2 * (multiplier if s1 else 1)) % 8, s1 ^ s2)

    return _formula_group(elements, mul, name)


def semidihedral16() -> FiniteGroup:
    return _maximal_cyclic_16(3, "SD16")


def modular16() -> FiniteGroup:
    return _maximal_cyclic_16(5, "M16")


def c4_semidirect_c4() -> FiniteGroup:
    """a^4 = b^4 = 1, b a b^-1 = a^-1."""
    elements = [(i, s) for i in range(4) for s in range(4)]

    def mul(a, b):
        i1, s1 = a
        i2, s2 = b
        return ((i1 + (i2 if s1 % 2 == 0 else -i2)) % 4, (s1 + s2) % 4)

    return _formula_group(elements, mul, "Z4:Z4")


def c22_semidirect_c4() -> FiniteGroup:
    """C2 x C2 extended by a 4-cycle that swaps the two factors."""
    elements = [(e1, e2, k) for e1 in (0, 1) for e2 in (0, 1) for k in range(4)]
    elements.sort()

    def mul(a, b):
        e1, e2, k = a
        f1, f2, l = b
        if k % 2:
            f1, f2 = f2, f1
        return ((e1 + f1) % 2, (e2 + f2) % 2, (k + l) % 4)

    return _formula_group(elements, mul, "Z2xZ2:Z4")


def central_product16() -> FiniteGroup:
    """Central product of Z4 and D8 over their shared center."""
    elements = [(k, x, z) for k in range(4) for x in (0, 1) for z in (0, 1)]

    def mul(a, b):
        k1, x1, z1 = a
        k2, x2, z2 = b
        return ((k1 + k2 + 2 * z1 * x2) % 4, x1 ^ x2, z1 ^ z2)

    return _formula_group(elements, mul, "Z4oD8")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    if g.table is None or h.table is None:
        raise ValueError("direct products need both multiplication tables")
    m = h.order
    table = (
        g.table[:, None, :, None].astype(np.int64) * m + h.table[None, :, None, :]
    ).reshape(g.order * m, g.order * m)
    return from_cayley_table(table, f"{g.name}x{h.name}")


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        raise ValueError("n must be at least 2")
    gens = ["(0 1)"]
    if n > 2:
        gens.append("(" + " ".join(str(i) for i in range(n)) + ")")
    return from_perm_generators(gens, n, f"S{n}")


def alternating4() -> FiniteGroup:
    return from_perm_generators(["(0 1 2)", "(1 2 3)"], 4, "A4")


def named_groups_through_order(max_order: int) -> dict[int, list[FiniteGroup]]:
    """Reference list of all groups of each order, for matching names.

    Covers orders 1..16.
    """
    if not 1 <= max_order <= 16:
        raise ValueError("supported range is 1..16")
    by_order: dict[int, list[FiniteGroup]] = {}
    builders: dict[int, list[Callable[[], FiniteGroup]]] = {
        1: [lambda: cyclic(1)],
        2: [lambda: cyclic(2)],
        3: [lambda: cyclic(3)],
        4: [lambda: cyclic(4), lambda: abelian(2, 2)],
        5: [lambda: cyclic(5)],
        6: [lambda: cyclic(6), lambda: symmetric(3)],
        7: [lambda: cyclic(7)],
        8: [
            lambda: cyclic(8),
            lambda: abelian(4, 2),
            lambda: abelian(2, 2, 2),
            lambda: dihedral(8),
            lambda: dicyclic(2),
        ],
        9: [lambda: cyclic(9), lambda: abelian(3, 3)],
        10: [lambda: cyclic(10), lambda: dihedral(10)],
        11: [lambda: cyclic(11)],
        12: [
            lambda: cyclic(12),
            lambda: abelian(6, 2),
            lambda: dihedral(12),
            lambda: alternating4(),
            lambda: dicyclic(3),
        ],
        13: [lambda: cyclic(13)],
        14: [lambda: cyclic(14), lambda: dihedral(14)],
        15: [lambda: cyclic(15)],
        16: [
            lambda: cyclic(16),
            lambda: abelian(8, 2),
            lambda: abelian(4, 4),
            lambda: abelian(4, 2, 2),
            lambda: abelian(2, 2, 2, 2),
            lambda: dihedral(16),
            lambda: semidihedral16(),
            lambda: dicyclic(4),
            lambda: modular16(),
            lambda: direct_product(dihedral(8), cyclic(2)),
            lambda: direct_product(dicyclic(2), cyclic(2)),
            lambda: c4_semidirect_c4(),
            lambda: c22_semidirect_c4(),
            lambda: central_product16(),
        ],
    }
    for order in range(1, max_order + 1):
        by_order[order] = [build() for build in builders[order]]
    return by_order
