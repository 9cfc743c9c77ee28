"""The comparison group G_j = Z_{m_j} x G_{j-1} and the map psi: G_j -> Gamma.

Elements of G_j are exponent vectors ``(n, a_(j-1), ..., a_1)``; the pair
``(n, v)`` in the usual notation is the flat tuple ``(n, *v)``.  Products
inside G_j never consult the table directly: conjugation by h_j is known only
through the images phi(h_i) (decomposed once), its powers phi^(2^k) are built
by repeated squaring, and the multiplication of images happens in G_(j-1).
That keeps G_j a group even when the table is corrupted.

Multiplication is

    (m, h) o (n, h') = ((m + n) mod m_j, z^[m+n >= m_j] o phi^n(h) o h')

where z is the exponent vector of h_j^(m_j) over the lower levels.  When
h_j^(m_j) is the identity this is the plain semidirect product; the wrap
factor makes non-split layers (Z_4 over Z_2, Q_8 over Z_2) come out right.
"""
from __future__ import annotations

import itertools

from .chain import ExponentVector, NormalChain
from .errors import StructureFailure
from .magma import MagmaTable, inverse, log2_ceil
from .qsub import decompose, recompose


class ExtensionGroup:
    def __init__(self, lower: "ExtensionGroup | None", m: int, images=(), wrap: ExponentVector | None = None):
        self.lower = lower
        if lower is None:
            # level 0: the trivial group on the empty vector
            self.level, self.m, self.radices = 0, 1, ()
            self.images, self.phi_pow, self.wrap = (), [], ()
            self._mul_cache, self._phi_cache = {}, {}
            return
        self.level = lower.level + 1
        self.m = int(m)
        self.radices = (self.m,) + lower.radices
        self.images = tuple(tuple(v) for v in images)
        if len(self.images) != lower.level:
            raise ValueError(f"need {lower.level} generator images, got {len(self.images)}")
        self.wrap = lower.identity if wrap is None else tuple(wrap)
        self._mul_cache: dict = {}
        self._phi_cache: dict = {}
        self.phi_pow = phi_pow_table(lower, self.images, self.m)

    @property
    def identity(self) -> ExponentVector:
        return (0,) * self.level

    @property
    def size(self) -> int:
        out = 1
        for r in self.radices:
            out *= r
        return out

    def elements(self):
        return itertools.product(*(range(r) for r in self.radices))

    def index(self, x: ExponentVector) -> int:
        i = 0
        for r, a in zip(self.radices, x):
            i = i * r + a
        return i

    def mul(self, x: ExponentVector, y: ExponentVector) -> ExponentVector:
        if self.level == 0:
            return ()
        key = (x, y)
        out = self._mul_cache.get(key)
        if out is None:
            out = ext_mul(self, x, y)
            self._mul_cache[key] = out
        return out

    def phi_n(self, n: int, v: ExponentVector) -> ExponentVector:
        key = (n, v)
        out = self._phi_cache.get(key)
        if out is None:
            out = apply_phi_n(self, n, v)
            self._phi_cache[key] = out
        return out

    def __repr__(self):
        return f"ExtensionGroup(level={self.level}, radices={self.radices})"


def trivial_group() -> ExtensionGroup:
    return ExtensionGroup(None, 1)


def unit_vector(level: int, i: int) -> ExponentVector:
    """Exponent vector of h_i over ``level`` levels."""
    v = [0] * level
    v[level - i] = 1
    return tuple(v)


def apply_map(lower: ExtensionGroup, images, v: ExponentVector) -> ExponentVector:
    """Image of v under the homomorphism sending h_i to images[i-1]."""
    acc = lower.identity
    L = len(v)
    for pos, a in enumerate(v):
        img = images[L - pos - 1]
        for _ in range(a):
            acc = lower.mul(acc, img)
    return acc


def phi_pow_table(lower: ExtensionGroup, images, m: int) -> list[tuple]:
    """Row k holds phi^(2^k)(h_i) for every i, for k = 0 .. ceil(log2 m)."""
    table = [tuple(images)]
    for _ in range(log2_ceil(m)):
        prev = table[-1]
        table.append(tuple(apply_map(lower, prev, img) for img in prev))
    return table


def apply_phi_n(G: ExtensionGroup, n: int, v: ExponentVector) -> ExponentVector:
    if n < 0 or n >= 1 << len(G.phi_pow):
        raise ValueError(f"phi^{n} is outside the precomputed power table")
    k = 0
    while n:
        if n & 1:
            v = apply_map(G.lower, G.phi_pow[k], v)
        n >>= 1
        k += 1
    return v


def ext_mul(G: ExtensionGroup, x: ExponentVector, y: ExponentVector) -> ExponentVector:
    lower = G.lower
    s = x[0] + y[0]
    w = lower.mul(G.phi_n(y[0], x[1:]), y[1:])
    if s >= G.m:
        s -= G.m
        w = lower.mul(G.wrap, w)
    return (s,) + w


def phi_of_generator(M: MagmaTable, chain: NormalChain, j: int, i: int, rng) -> ExponentVector:
    """Decomposition of h_j^-1 * (h_i * h_j) over the levels below j."""
    rows = M.rows
    hj, hi = chain.h[j - 1], chain.h[i - 1]
    hj_inv = inverse(M, hj, chain.e)
    return decompose(M, chain, j - 1, rows[hj_inv][rows[hi][hj]], rng)


def build_extension(M: MagmaTable, chain: NormalChain, j: int, lower: ExtensionGroup, rng) -> ExtensionGroup:
    images = [phi_of_generator(M, chain, j, i, rng) for i in range(1, j)]
    return ExtensionGroup(lower, chain.m[j - 1], images, chain.wraps[j - 1])


def check_automorphism(G: ExtensionGroup) -> bool:
    """phi is injective on G_(j-1)."""
    seen = {G.phi_n(1, v) for v in G.lower.elements()}
    return len(seen) == G.lower.size


def check_extension_data(G: ExtensionGroup) -> bool:
    """The data (phi, z) define a group: phi is multiplicative, fixes z, and
    phi^(m_j) is conjugation by z."""
    lower = G.lower
    elems = list(lower.elements())
    for u in elems:
        pu = G.phi_n(1, u)
        for w in elems:
            if G.phi_n(1, lower.mul(u, w)) != lower.mul(pu, G.phi_n(1, w)):
                return False
    z = G.wrap
    if G.phi_n(1, z) != z:
        return False
    for i in range(1, G.level):
        u = unit_vector(G.level - 1, i)
        if lower.mul(z, G.phi_n(G.m, u)) != lower.mul(u, z):
            return False
    return True


def psi(M: MagmaTable, chain: NormalChain, j: int, x: ExponentVector) -> int:
    """(n, v) -> h_j^n * recompose(v)."""
    if len(x) != j:
        raise ValueError(f"expected a level-{j} element, got {x}")
    return recompose(M, chain, x)


def inverse_in(G: ExtensionGroup, x: ExponentVector) -> ExponentVector:
    e = G.identity
    for y in G.elements():
        if G.mul(x, y) == e:
            return y
    raise StructureFailure(f"{x} has no inverse in G_{G.level}")
