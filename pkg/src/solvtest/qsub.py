"""Relative order of h_j over H_{j-1}, and decomposition into exponent vectors.

Both run on the sparse simulator: prepare a coset superposition, let the
oracle act on it under control of Z_N registers, Fourier transform the
control registers and read off the hidden period.  Every answer is checked
classically (recomposition, membership) before it is returned, so a wrong
sample on a non-group ends up as ``StructureFailure`` rather than a wrong
answer.

Exponent vectors are tuples ``(a_j, ..., a_1)``, highest level first, and
stand for ``h_j^a_j * (h_(j-1)^a_(j-1) * (... * h_1^a_1))``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import qsim
from .chain import ExponentVector, NormalChain
from .errors import Fail, StructureFailure
from .magma import MagmaTable, log2_ceil, order

# sampling rounds for exponent extraction, as for relative-order verification
SAMPLE_ROUNDS = 3


def _pow_list(M: MagmaTable, chain: NormalChain, x: int, count: int) -> list:
    """[None, x, x^2, ..., x^(count-1)], cached per element on the chain."""
    cached = chain._powers.get(x)
    if cached is None or len(cached) < count:
        row = M.rows[x]
        cached = [None]
        p = x
        for _ in range(1, max(count, 2)):
            cached.append(p)
            p = row[p]
        chain._powers[x] = cached
    return cached


def _h_pow(M: MagmaTable, chain: NormalChain, x: int, a: int) -> int:
    return _pow_list(M, chain, x, a + 1)[a]


def _level_order(M: MagmaTable, chain: NormalChain, level: int) -> int:
    if len(chain.orders) >= level:
        return chain.orders[level - 1]
    return order(M, chain.h[level - 1])


def recompose(M: MagmaTable, chain: NormalChain, v: ExponentVector) -> int:
    rows = M.rows
    acc = None
    L = len(v)
    for level in range(1, L + 1):
        a = v[L - level]
        if a:
            p = _h_pow(M, chain, chain.h[level - 1], a)
            acc = p if acc is None else rows[p][acc]
    return chain.e if acc is None else acc


def vectors(chain: NormalChain, j: int):
    """All exponent vectors over levels <= j, in enumeration order."""
    return itertools.product(*(range(mi) for mi in reversed(chain.m[:j])))


def level_members(M: MagmaTable, chain: NormalChain, j: int) -> list[int]:
    """H_j as a list indexed like ``vectors(chain, j)``; duplicates are a failure."""
    cached = chain._members.get(j)
    if cached is not None:
        return cached
    if j == 0:
        out = [chain.e]
    else:
        if chain.size(j) > M.n:
            raise StructureFailure(f"prod m_i = {chain.size(j)} exceeds |Gamma| = {M.n}")
        lower = level_members(M, chain, j - 1)
        hp = _pow_list(M, chain, chain.h[j - 1], chain.m[j - 1])
        rows = M.rows
        out = list(lower)
        for a in range(1, chain.m[j - 1]):
            row = rows[hp[a]]
            out.extend(row[y] for y in lower)
        if len(set(out)) != len(out):
            raise StructureFailure(f"H_{j} has repeated elements: prod m_i overcounts")
    chain._members[j] = out
    return out


@dataclass
class OrderResult:
    m: int
    r: int
    samples: list[int]
    wrap: ExponentVector


def _in_lower(M, chain, j, y, rng) -> ExponentVector | None:
    """Exponent vector of y over levels < j, or None if y does not decompose."""
    if j == 1:
        return () if y == chain.e else None
    try:
        return decompose(M, chain, j - 1, y, rng)
    except Fail:
        return None


def find_relative_order(M: MagmaTable, chain: NormalChain, j: int, rng, rounds: int = 3) -> OrderResult:
    h = chain.h[j - 1]
    r = order(M, h)
    H = level_members(M, chain, j - 1)
    state = qsim.tensor(qsim.uniform_int_state(r), qsim.coset_state(M, H))
    state = qsim.apply_ctrl_mult(state, 0, 1, M, _pow_list(M, chain, h, r))
    state = qsim.qft_mod(state, 0, r)
    k = log2_ceil(r) + 8
    samples: list[int] = []
    for _ in range(rounds):
        # the prepared state is the same every time, so sample it repeatedly
        for _ in range(k):
            b, _ = qsim.measure(state, 0, rng)
            samples.append(b)
        m = r // math.gcd(r, *samples)
        wrap = _in_lower(M, chain, j, _h_pow(M, chain, h, m), rng)
        if wrap is not None:
            return OrderResult(m=m, r=r, samples=samples, wrap=wrap)
    raise StructureFailure(f"relative order of h_{j} not verified after {rounds} rounds")


def relative_order(M: MagmaTable, chain: NormalChain, j: int, rng) -> int:
    return find_relative_order(M, chain, j, rng).m


def _exponent_state(M, chain, level, x):
    m = chain.m[level - 1]
    H = level_members(M, chain, level - 1)
    state = qsim.tensor(qsim.uniform_int_state(m), qsim.uniform_int_state(m), qsim.coset_state(M, H))
    state = qsim.apply_ctrl_mult(state, 1, 2, M, _pow_list(M, chain, chain.h[level - 1], m))
    return qsim.apply_ctrl_mult(state, 0, 2, M, _pow_list(M, chain, x, m))


def sample_exponent_pair(state, m: int, rng) -> tuple[int, int]:
    """One (c, d) draw: measure the Gamma register, transform both Z_m registers."""
    _, s = qsim.measure(state, 2, rng)
    s = qsim.qft_mod(s, 0, m)
    s = qsim.qft_mod(s, 1, m)
    c, s = qsim.measure(s, 0, rng)
    d, _ = qsim.measure(s, 1, rng)
    return c, d


def exponent_at_level(M: MagmaTable, chain: NormalChain, level: int, x: int, rng,
                      rounds: int = SAMPLE_ROUNDS) -> int:
    """a_level of x, from samples with c = a * d (mod m).

    Each round draws up to 4*ceil(log2 m) + 8 samples looking for an
    invertible d; only after ``rounds`` empty rounds is it a failure.
    """
    m = chain.m[level - 1]
    if m == 1:
        return 0
    state = _exponent_state(M, chain, level, x)
    for _ in range(rounds * (4 * log2_ceil(m) + 8)):
        c, d = sample_exponent_pair(state, m, rng)
        if math.gcd(d, m) == 1:
            return c * pow(d, -1, m) % m
    raise StructureFailure(f"no invertible sample at level {level}")


def decompose(M: MagmaTable, chain: NormalChain, j: int, x: int, rng) -> ExponentVector:
    rows = M.rows
    vec = []
    cur = x
    for level in range(j, 0, -1):
        a = exponent_at_level(M, chain, level, cur, rng)
        vec.append(a)
        if a:
            # peel h^a off the left: cur <- h^(r - a) * cur
            r = _level_order(M, chain, level)
            cur = rows[_h_pow(M, chain, chain.h[level - 1], r - a)][cur]
    if cur != chain.e:
        raise StructureFailure(f"element {x} leaves a non-identity residual {cur}")
    vec = tuple(vec)
    if recompose(M, chain, vec) != x:
        raise StructureFailure(f"decomposition of {x} does not recompose")
    return vec
