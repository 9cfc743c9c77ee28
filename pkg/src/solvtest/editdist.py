"""Brute-force edit distance between multiplication tables, and a catalog of
all groups of order at most 8 to measure distance against.

For tables A (size a) and B (size b <= a) the cost of a relabelling is the
a^2 - b^2 entries deleted with the unmatched rows and columns plus the
entries of the matched subtable that disagree; the distance is the minimum
over all injections of B into A, divided by a^2.  Equal sizes reduce to
the minimum mismatch count over bijections, divided by n^2.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import groups
from .errors import Unavailable
from .magma import MagmaTable

MAX_BRUTE_FORCE = 8
CATALOG_MAX_ORDER = 8
SIZE_WINDOW = 2
_CHUNK = 1 << 14


@lru_cache(maxsize=None)
def _injections(big: int, small: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(big), small)), dtype=np.int64).reshape(-1, small)


def _min_mismatch(big: np.ndarray, small: np.ndarray) -> int:
    """min over injections f of #{(i, j): big[f(i), f(j)] != f(small[i, j])}."""
    P = _injections(big.shape[0], small.shape[0])
    best = small.size
    for start in range(0, P.shape[0], _CHUNK):
        p = P[start:start + _CHUNK]
        lhs = big[p[:, :, None], p[:, None, :]]
        rhs = p[:, small]
        best = min(best, int((lhs != rhs).sum(axis=(1, 2)).min()))
        if best == 0:
            break
    return best


def table_edit_distance(A: MagmaTable, B: MagmaTable, cap: int = MAX_BRUTE_FORCE) -> Fraction:
    if max(A.n, B.n) > cap:
        raise Unavailable(f"brute force limited to tables of size <= {cap}")
    big, small = (A, B) if A.n >= B.n else (B, A)
    cost = big.n ** 2 - small.n ** 2 + _min_mismatch(big.array, small.array)
    return Fraction(cost, big.n ** 2)


def is_isomorphic(A: MagmaTable, B: MagmaTable) -> bool:
    return A.n == B.n and table_edit_distance(A, B) == 0


def size_change_bound(n: int, s: int) -> Fraction:
    """Lower bound on the distance between any size-n and any size-s table."""
    big = max(n, s)
    return Fraction(abs(n * n - s * s), big * big)


def outside_window_bound(n: int, window: int = SIZE_WINDOW) -> Fraction:
    """Smallest size_change_bound over sizes more than ``window`` away from n."""
    candidates = [size_change_bound(n, n + window + 1)]
    if n - window - 1 >= 1:
        candidates.append(size_change_bound(n, n - window - 1))
    return min(candidates)


def _catalog_orders(order: int):
    c, d = groups.cyclic, groups.direct_product
    return {
        1: lambda: [c(1)],
        2: lambda: [c(2)],
        3: lambda: [c(3)],
        4: lambda: [c(4), d(c(2), c(2))],
        5: lambda: [c(5)],
        6: lambda: [c(6), groups.dihedral(3)],
        7: lambda: [c(7)],
        8: lambda: [c(8), d(c(2), c(4)), d(c(2), c(2), c(2)), groups.dihedral(4), groups.quaternion()],
    }.get(order)


@lru_cache(maxsize=None)
def _catalog(order: int) -> tuple[MagmaTable, ...]:
    make = _catalog_orders(order)
    if make is None:
        raise Unavailable(f"no exhaustive catalog for order {order}")
    return tuple(make())


def group_catalog(order: int) -> list[MagmaTable]:
    """One table per isomorphism class of groups of this order (orders 1..8)."""
    return list(_catalog(order))


def distance_to_groups(A: MagmaTable, sizes=None) -> Fraction:
    """Minimum distance from A to a catalog group whose order is in ``sizes``.

    Default sizes are n-2 .. n+2 clipped to the catalog.  Sizes are visited
    nearest first and skipped once the size change alone costs more than the
    best distance found so far.
    """
    if sizes is None:
        sizes = range(max(1, A.n - SIZE_WINDOW), A.n + SIZE_WINDOW + 1)
    sizes = sorted((s for s in sizes if 1 <= s <= CATALOG_MAX_ORDER), key=lambda s: (abs(s - A.n), s))
    if not sizes:
        raise Unavailable(f"no catalog sizes near {A.n}")
    if A.n > MAX_BRUTE_FORCE:
        raise Unavailable(f"brute force limited to tables of size <= {MAX_BRUTE_FORCE}")
    best = None
    for s in sizes:
        if best is not None and size_change_bound(A.n, s) >= best:
            continue
        for G in _catalog(s):
            d = table_edit_distance(A, G)
            if best is None or d < best:
                best = d
    return best
