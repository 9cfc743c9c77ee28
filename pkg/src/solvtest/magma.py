"""Finite magmas given by an explicit multiplication table.

Elements are integer indices into the ground set; labels only matter for I/O.
Powers are left-nested, ``a^k = a * a^(k-1)``, and exponent 0 is never
evaluated here: call sites treat ``h^0 * x`` as plain ``x``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import InvalidElement, InvalidExponent, InvalidInput, StructureFailure


def log2_ceil(n: int) -> int:
    """ceil(log2 n) for n >= 1."""
    return (n - 1).bit_length()


@dataclass(frozen=True, eq=True)
class MagmaTable:
    n: int
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("n must be >= 1")
        if len(self.labels) != self.n:
            raise InvalidInput(f"labels has {len(self.labels)} entries, expected {self.n}")
        if len(set(self.labels)) != self.n:
            raise InvalidInput("labels are not pairwise distinct")
        if len(self.rows) != self.n:
            raise InvalidInput(f"table has {len(self.rows)} rows, expected {self.n}")
        for i, row in enumerate(self.rows):
            if len(row) != self.n:
                raise InvalidInput(f"table row {i} has {len(row)} entries, expected {self.n}")
            for v in row:
                if not 0 <= v < self.n:
                    raise InvalidInput(f"table row {i} has out-of-range entry {v}")

    @classmethod
    def from_rows(cls, rows, labels: Sequence[str] | None = None) -> "MagmaTable":
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(n, tuple(str(s) for s in labels), rows)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)
        arr.flags.writeable = False
        return arr

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidElement(f"no element labelled {label!r}") from None

    def with_rows(self, rows) -> "MagmaTable":
        return MagmaTable.from_rows(rows, self.labels)


def _check(M: MagmaTable, a: int):
    if not 0 <= a < M.n:
        raise InvalidElement(f"element {a} outside [0, {M.n})")


def multiply(M: MagmaTable, a: int, b: int) -> int:
    _check(M, a)
    _check(M, b)
    return M.rows[a][b]


def power(M: MagmaTable, a: int, k: int) -> int:
    _check(M, a)
    if k < 1:
        raise InvalidExponent(f"power needs k >= 1, got {k}")
    row = M.rows[a]
    p = a
    for _ in range(k - 1):
        p = row[p]
    return p


def powers(M: MagmaTable, a: int, count: int) -> list[int | None]:
    """``[None, a, a^2, ..., a^(count-1)]``; ``None`` stands for exponent 0."""
    out: list[int | None] = [None]
    row = M.rows[a]
    p = a
    for _ in range(1, count):
        out.append(p)
        p = row[p]
    return out


def order(M: MagmaTable, a: int) -> int:
    """Smallest r >= 1 with a^(r+1) == a, found by iteration capped at n."""
    _check(M, a)
    row = M.rows[a]
    p = a
    for r in range(1, M.n + 1):
        nxt = row[p]
        if nxt == a:
            return r
        p = nxt
    raise StructureFailure(f"powers of element {a} never return to it within {M.n} steps")


def inverse(M: MagmaTable, a: int, e: int) -> int:
    if a == e:
        return e
    r = order(M, a)
    if r < 2:
        raise StructureFailure(f"element {a} is idempotent but is not the identity")
    b = power(M, a, r - 1)
    if M.rows[b][a] != e:
        raise StructureFailure(f"a^(r-1) * a != e for element {a}")
    return b


def row_bijective(M: MagmaTable, a: int) -> bool:
    _check(M, a)
    return len(set(M.rows[a])) == M.n


def find_identity(M: MagmaTable, rng, k: int | None = None) -> int:
    """Guess the identity as a^order(a) for a random a, then spot-check it."""
    if k is None:
        k = log2_ceil(M.n) + 4
    a = int(rng.integers(0, M.n))
    e = power(M, a, order(M, a))
    for _ in range(k):
        x = int(rng.integers(0, M.n))
        if M.rows[e][x] != x or M.rows[x][e] != x:
            raise StructureFailure(f"candidate identity {e} fails on element {x}")
    return e


def is_associative(M: MagmaTable) -> bool:
    return _assoc(M.array)


def _assoc(T: np.ndarray) -> bool:
    # (a*b)*c == a*(b*c) for all a, b, c
    left = T[T[:, :, None], np.arange(T.shape[0])[None, None, :]]
    right = T[np.arange(T.shape[0])[:, None, None], T[None, :, :]]
    return bool(np.array_equal(left, right))


def is_group(M: MagmaTable) -> bool:
    """Exhaustive check of associativity, two-sided identity and inverses."""
    T = M.array
    if not _assoc(T):
        return False
    idx = np.arange(M.n)
    ids = [e for e in range(M.n) if np.array_equal(T[e], idx) and np.array_equal(T[:, e], idx)]
    if not ids:
        return False
    e = ids[0]
    return all((T[a] == e).any() and (T[:, a] == e).any() for a in range(M.n))
