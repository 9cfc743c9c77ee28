"""Cayley tables of small named groups, plus random non-group tables."""
from __future__ import annotations

import itertools

import numpy as np

from .errors import InvalidSpec
from .magma import MagmaTable


def from_elements(elements, mul, label=str) -> MagmaTable:
    elements = list(elements)
    where = {x: i for i, x in enumerate(elements)}
    rows = [[where[mul(a, b)] for b in elements] for a in elements]
    return MagmaTable.from_rows(rows, [label(x) for x in elements])


def cyclic(n: int) -> MagmaTable:
    if n < 1:
        raise InvalidSpec("cyclic group needs n >= 1")
    return from_elements(range(n), lambda a, b: (a + b) % n)


def _dihedral_label(x):
    f, k = x
    rot = "" if k == 0 else ("r" if k == 1 else f"r{k}")
    if f == 0:
        return rot or "e"
    return "s" + rot


def dihedral(n: int) -> MagmaTable:
    """Symmetries of the n-gon, order 2n, elements s^f r^k."""
    if n < 1:
        raise InvalidSpec("dihedral group needs n >= 1")

    def mul(x, y):
        (f1, k1), (f2, k2) = x, y
        return ((f1 + f2) % 2, ((-k1 if f2 else k1) + k2) % n)

    return from_elements([(f, k) for f in range(2) for k in range(n)], mul, _dihedral_label)


def _compose(p, q):
    return tuple(p[i] for i in q)


def _perm_label(p):
    return "".join(str(i) for i in p)


def _is_even(p) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def symmetric(n: int) -> MagmaTable:
    if not 1 <= n <= 4:
        raise InvalidSpec("symmetric group supported for 1 <= n <= 4")
    return from_elements(itertools.permutations(range(n)), _compose, _perm_label)


def alternating(n: int) -> MagmaTable:
    if not 1 <= n <= 5:
        raise InvalidSpec("alternating group supported for 1 <= n <= 5")
    perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return from_elements(perms, _compose, _perm_label)


_QUAT = {  # (unit, unit) -> (sign, unit) for units 1, i, j, k
    ("1", u): (1, u) for u in "1ijk"
}
_QUAT.update({(u, "1"): (1, u) for u in "ijk"})
_QUAT.update({
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
    ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
})


def quaternion() -> MagmaTable:
    def mul(x, y):
        sign, unit = _QUAT[(x[1], y[1])]
        return (x[0] * y[0] * sign, unit)

    elements = [(s, u) for s in (1, -1) for u in "1ijk"]
    return from_elements(elements, mul, lambda x: ("" if x[0] > 0 else "-") + x[1])


def direct_product(*tables: MagmaTable) -> MagmaTable:
    if not tables:
        raise InvalidSpec("direct product of nothing")
    out = tables[0]
    for B in tables[1:]:
        A = out
        elements = [(a, b) for a in range(A.n) for b in range(B.n)]
        out = from_elements(
            elements,
            lambda x, y, A=A, B=B: (A.rows[x[0]][y[0]], B.rows[x[1]][y[1]]),
            lambda x, A=A, B=B: f"({A.labels[x[0]]},{B.labels[x[1]]})",
        )
    return out


def random_latin(n: int, rng) -> MagmaTable:
    """Random Latin square by randomized backtracking over cells in row-major order."""
    if n < 1:
        raise InvalidSpec("Latin square needs n >= 1")
    grid = np.full((n, n), -1, dtype=np.int64)
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    options: list[list[int]] = [[] for _ in cells]
    pos = 0
    fresh = True
    while pos < len(cells):
        i, j = cells[pos]
        if fresh:
            cand = [v for v in range(n) if v not in row_used[i] and v not in col_used[j]]
            order = rng.permutation(len(cand)) if cand else []
            options[pos] = [cand[k] for k in order]
        if grid[i, j] >= 0:
            v = int(grid[i, j])
            row_used[i].discard(v)
            col_used[j].discard(v)
            grid[i, j] = -1
        if options[pos]:
            v = options[pos].pop()
            grid[i, j] = v
            row_used[i].add(v)
            col_used[j].add(v)
            pos += 1
            fresh = True
        else:
            pos -= 1
            fresh = False
    return MagmaTable.from_rows(grid.tolist())


def padded(base: MagmaTable, junk: int, rng) -> MagmaTable:
    """base plus ``junk`` extra elements; every row stays a permutation.

    The base identity still acts as a two-sided identity on the junk, so the
    padding cannot be spotted by the identity probe alone.
    """
    g, n = base.n, base.n + junk
    idx = np.arange(g)
    e = next(a for a in range(g) if list(base.rows[a]) == idx.tolist())
    rows = []
    for a in range(g):
        tail = list(range(g, n)) if a == e else (g + rng.permutation(junk)).tolist()
        rows.append(list(base.rows[a]) + tail)
    for x in range(g, n):
        # x * e = x, everything else a random permutation of the rest
        rest = [v for v in rng.permutation(n).tolist() if v != x]
        row = rest[:e] + [x] + rest[e:]
        rows.append(row)
    labels = list(base.labels) + [f"junk{i}" for i in range(junk)]
    return MagmaTable.from_rows(rows, labels)
