"""Random generators and the polycyclic normal chain h_1, ..., h_t.

The chain is read off the derived series of the subgroup generated by the
random sample, with each abelian layer split into cyclic steps.  Everything
is explicit enumeration over the table, which is cheap at the sizes we run
and deterministic on genuine groups.  On a table that is not a group, any
inconsistency met along the way is raised as ``StructureFailure``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotSolvable, StructureFailure
from .magma import MagmaTable, inverse, log2_ceil

# An exponent vector (a_j, ..., a_1), highest level first.
ExponentVector = tuple


@dataclass
class NormalChain:
    e: int
    h: list[int]
    m: list[int] = field(default_factory=list)
    # order(h_j) in the table, recorded when m_j is found
    orders: list[int] = field(default_factory=list)
    # exponent vector of h_j^(m_j) over the levels below j
    wraps: list[ExponentVector] = field(default_factory=list)
    phi_tables: list = field(default_factory=list)
    _members: dict = field(default_factory=dict, repr=False, compare=False)
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def t(self) -> int:
        return len(self.h)

    def size(self, j: int) -> int:
        """|H_j| = m_1 * ... * m_j."""
        out = 1
        for mi in self.m[:j]:
            out *= mi
        return out


def sample_generators(M: MagmaTable, rng, s: int | None = None) -> list[int]:
    if s is None:
        s = log2_ceil(M.n) + 4
    return [int(rng.integers(0, M.n)) for _ in range(s)]


def closure(M: MagmaTable, gens, cap: int | None = None) -> frozenset[int]:
    """Smallest subset containing ``gens`` and closed under multiplication."""
    if cap is None:
        cap = M.n
    rows = M.rows
    elems: list[int] = []
    inside: set[int] = set()
    todo = list(dict.fromkeys(int(g) for g in gens))
    while todo:
        x = todo.pop()
        if x in inside:
            continue
        inside.add(x)
        elems.append(x)
        if len(inside) > cap:
            raise StructureFailure(f"closure exceeds cap {cap}")
        for y in elems:
            for z in (rows[x][y], rows[y][x]):
                if z not in inside:
                    todo.append(z)
    return frozenset(inside)


def commutator(M: MagmaTable, a: int, b: int, inv: dict[int, int]) -> int:
    """[a, b] = ((a^-1 * b^-1) * a) * b."""
    rows = M.rows
    return rows[rows[rows[inv[a]][inv[b]]][a]][b]


def derived_series(M: MagmaTable, K: frozenset[int], e: int) -> list[frozenset[int]]:
    """K = K0 > K1 > ... > {e}; raises NotSolvable when it stalls."""
    inv = {}
    for a in K:
        inv[a] = inverse(M, a, e)
        if inv[a] not in K:
            raise StructureFailure(f"inverse of {a} leaves the generated subset")
    series = [K]
    max_steps = log2_ceil(M.n) + 1
    cur = K
    for _ in range(max_steps):
        if cur == {e}:
            return series
        comms = {commutator(M, a, b, inv) for a in cur for b in cur}
        nxt = closure(M, comms | {e})
        if not nxt <= cur:
            raise StructureFailure("commutator subgroup is not contained in the previous term")
        if nxt == cur:
            raise NotSolvable(f"derived series stabilises at a subset of size {len(cur)}")
        series.append(nxt)
        cur = nxt
    if cur != {e}:
        raise NotSolvable(f"derived series does not reach the identity within {max_steps} steps")
    return series


def residual_order(M: MagmaTable, g: int, N: frozenset[int]) -> int:
    """min{m >= 1 : g^m in N}."""
    row = M.rows[g]
    p = g
    for m in range(1, M.n + 1):
        if p in N:
            return m
        p = row[p]
    raise StructureFailure(f"no power of {g} lands in the subgroup")


def _refine_layer(M: MagmaTable, upper: frozenset[int], lower: frozenset[int]) -> list[int]:
    # Split the abelian layer upper/lower into cyclic steps: repeatedly adjoin
    # the representative of largest residual order, lowest index on ties.
    out = []
    N = lower
    while N != upper:
        best, best_m = None, 0
        for g in sorted(upper - N):
            m = residual_order(M, g, N)
            if m > best_m:
                best, best_m = g, m
        nxt = closure(M, N | {best})
        if not nxt <= upper or nxt == N:
            raise StructureFailure("cyclic refinement left the layer")
        out.append(best)
        N = nxt
    return out


def build_normal_chain(M: MagmaTable, gens, e: int) -> NormalChain:
    K = closure(M, set(gens) | {e})
    series = derived_series(M, K, e)
    h: list[int] = []
    # bottom of the chain first: the last nontrivial derived term
    for upper, lower in reversed(list(zip(series[:-1], series[1:]))):
        h.extend(_refine_layer(M, upper, lower))
    return NormalChain(e=e, h=h)
