import numpy as np
import pytest

from solvtest import editdist
from solvtest.chain import build_normal_chain
from solvtest.extension import build_extension, trivial_group
from solvtest.harness import NAMED, generate
from solvtest.qsub import find_relative_order


def catalog_solvable():
    """(name, table) for every catalog group of order <= 8 plus the named ones."""
    out = []
    for order in range(1, 9):
        for k, G in enumerate(editdist.group_catalog(order)):
            out.append((f"order{order}#{k}", G))
    for name, spec in NAMED.items():
        out.append((name, generate(spec)))
    return out


CATALOG = catalog_solvable()


def identity_of(M):
    idx = list(range(M.n))
    return next(a for a in range(M.n) if list(M.rows[a]) == idx)


def full_chain(M, seed=0, with_extensions=False):
    """Chain generated by the whole table, every level filled in."""
    rng = np.random.default_rng(seed)
    e = identity_of(M)
    chain = build_normal_chain(M, range(M.n), e)
    exts = [trivial_group()]
    for j in range(1, chain.t + 1):
        res = find_relative_order(M, chain, j, rng)
        chain.m.append(res.m)
        chain.orders.append(res.r)
        chain.wraps.append(res.wrap)
        if with_extensions:
            exts.append(build_extension(M, chain, j, exts[-1], rng))
    if with_extensions:
        return chain, exts
    return chain


@pytest.fixture
def S3():
    return generate("dihedral:3")


@pytest.fixture
def Z6():
    return generate("cyclic:6")


def row_swapped(M, swaps, seed):
    """M with ``swaps`` random in-row swaps (rows stay permutations)."""
    rng = np.random.default_rng(seed)
    rows = [list(r) for r in M.rows]
    for _ in range(swaps):
        a = int(rng.integers(M.n))
        i, j = (int(v) for v in rng.choice(M.n, 2, replace=False))
        rows[a][i], rows[a][j] = rows[a][j], rows[a][i]
    return M.with_rows(rows)


# (family, swaps, seed): the chain and G come from the genuine group and psi
# is evaluated on the swapped table
HOM_INSTANCES = [
    ("symmetric:4", 1, 0), ("symmetric:4", 1, 1), ("symmetric:4", 2, 2), ("symmetric:4", 3, 3),
    ("alternating:4", 1, 0), ("cyclic:12", 1, 0), ("cyclic:12", 2, 1),
    ("dihedral:4", 1, 0), ("quaternion", 1, 0), ("cyclic:2*cyclic:4", 1, 0),
]


def hom_instance(spec, swaps, seed):
    from solvtest.homtest import exact_violation_rate
    M = generate(spec)
    chain, exts = full_chain(M, with_extensions=True)
    bad = row_swapped(M, swaps, seed)
    return bad, chain, exts[-1], exact_violation_rate(bad, chain, exts[-1])


# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
