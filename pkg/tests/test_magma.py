import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from solvtest.errors import InvalidElement, InvalidExponent, InvalidInput, StructureFailure
from solvtest.groups import cyclic, random_latin
from solvtest.magma import (MagmaTable, find_identity, inverse, is_associative, multiply, order, power,
                            row_bijective)

from conftest import CATALOG, identity_of


def test_multiply_examples(S3):
    Z3 = cyclic(3)
    assert multiply(Z3, 1, 2) == 0
    e = identity_of(S3)
    assert all(multiply(S3, e, a) == a for a in range(S3.n))
    assert multiply(S3, S3.index("s"), S3.index("r")) == S3.index("sr")


def test_multiply_rejects_bad_index(S3):
    with pytest.raises(InvalidElement):
        multiply(S3, 6, 0)
    with pytest.raises(InvalidElement):
        multiply(S3, 0, -1)


def test_power_examples(S3):
    r = S3.index("r")
    assert power(S3, r, 1) == r
    assert power(S3, r, 3) == S3.index("e")
    assert power(cyclic(12), 1, 12) == 0
    with pytest.raises(InvalidExponent):
        power(S3, r, 0)


def test_order_examples(S3):
    assert order(S3, S3.index("e")) == 1
    assert order(S3, S3.index("r")) == 3
    assert order(S3, S3.index("s")) == 2


def _orbit_returns(rows, a):
    seen, p = set(), a
    while p not in seen:
        seen.add(p)
        p = rows[a][p]
        if p == a:
            return True
    return False


def test_order_fails_when_powers_never_return():
    # brute force: first 3x3 table with an element whose left-nested powers never revisit it
    for flat in itertools.product(range(3), repeat=9):
        rows = [flat[0:3], flat[3:6], flat[6:9]]
        if not _orbit_returns(rows, 0):
            break
    M = MagmaTable.from_rows(rows)
    with pytest.raises(StructureFailure):
        order(M, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**32 - 1))
def test_order_never_fails_on_row_bijective_tables(n, seed):
    # the left-nested power sequence of a is the orbit of a under its own row
    M = random_latin(n, np.random.default_rng(seed))
    for a in range(n):
        r = order(M, a)
        assert 1 <= r <= n


def test_inverse_examples(S3):
    Z6 = cyclic(6)
    assert inverse(Z6, 2, 0) == 4
    assert inverse(Z6, 0, 0) == 0
    e = S3.index("e")
    assert inverse(S3, S3.index("sr"), e) == S3.index("sr")


def test_inverse_fails_on_idempotent_non_identity():
    M = MagmaTable.from_rows([[0, 1], [1, 1]])
    with pytest.raises(StructureFailure):
        inverse(M, 1, 0)


def test_row_bijective_examples(S3):
    assert all(row_bijective(S3, a) for a in range(S3.n))
    rows = [list(r) for r in S3.rows]
    rows[2][0] = rows[2][1]
    bad = S3.with_rows(rows)
    assert not row_bijective(bad, 2)
    L = random_latin(5, np.random.default_rng(3))
    assert all(row_bijective(L, a) for a in range(5))


def test_find_identity_examples(S3):
    rng = np.random.default_rng(0)
    assert find_identity(cyclic(6), rng) == 0
    assert find_identity(S3, rng) == S3.index("e")


def test_find_identity_fails_without_identity():
    n = 5
    M = MagmaTable.from_rows([[(j + 1) % n for j in range(n)] for _ in range(n)])
    # brute force: no element is a two-sided identity
    assert not any(all(M.rows[e][x] == x == M.rows[x][e] for x in range(n)) for e in range(n))
    for seed in range(20):
        with pytest.raises(StructureFailure):
            find_identity(M, np.random.default_rng(seed))


def test_table_invariants():
    with pytest.raises(InvalidInput):
        MagmaTable.from_rows([[0, 2], [1, 0]])
    with pytest.raises(InvalidInput):
        MagmaTable.from_rows([[0, 1], [1, 0]], labels=["a", "a"])
    with pytest.raises(InvalidInput):
        MagmaTable.from_rows([])


@pytest.mark.parametrize("name,G", CATALOG, ids=[c[0] for c in CATALOG])
def test_catalog_groups_are_associative_and_row_bijective(name, G):
    T = G.array
    brute = all(T[T[a, b], c] == T[a, T[b, c]] for a in range(G.n) for b in range(G.n) for c in range(G.n)) \
        if G.n <= 12 else is_associative(G)
    assert brute
    assert is_associative(G)
    assert all(row_bijective(G, a) for a in range(G.n))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CATALOG), st.integers(1, 30), st.integers(1, 30), st.data())
def test_power_is_additive_on_groups(named, j, k, data):
    _, G = named
    a = data.draw(st.integers(0, G.n - 1))
    assert power(G, a, j + k) == multiply(G, power(G, a, j), power(G, a, k))


@pytest.mark.parametrize("name,G", CATALOG, ids=[c[0] for c in CATALOG])
def test_inverse_is_an_involution(name, G):
    e = identity_of(G)
    for a in range(G.n):
        b = inverse(G, a, e)
        assert G.rows[a][b] == e == G.rows[b][a]
        assert inverse(G, b, e) == a
