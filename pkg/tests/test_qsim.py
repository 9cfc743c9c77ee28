import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from solvtest import qsim
from solvtest.errors import InvalidDimension, InvalidInput, InvalidRegister, OracleNotUnitary
from solvtest.harness import generate


def dense(state):
    out = np.zeros(state.dims, dtype=complex)
    for t, a in state.amps.items():
        out[t] = a
    return out


def random_state(rng, dims, support=None):
    size = int(np.prod(dims))
    k = size if support is None else min(support, size)
    picks = rng.choice(size, size=k, replace=False)
    vals = rng.normal(size=k) + 1j * rng.normal(size=k)
    vals /= np.linalg.norm(vals)
    return qsim.SparseState(dims, {tuple(int(v) for v in np.unravel_index(p, dims)): complex(a)
                                   for p, a in zip(picks, vals)})


def test_uniform_int_state():
    s = qsim.uniform_int_state(1)
    assert s.amps == {(0,): 1 + 0j}
    s = qsim.uniform_int_state(4)
    assert sorted(s.amps) == [(0,), (1,), (2,), (3,)]
    assert all(abs(a - 0.5) < 1e-15 for a in s.amps.values())
    assert abs(s.norm() - 1) < 1e-12
    with pytest.raises(InvalidDimension):
        qsim.uniform_int_state(0)


def test_coset_state(Z6):
    s = qsim.coset_state(Z6, {0})
    assert s.amps == {(0,): 1 + 0j}
    s = qsim.coset_state(Z6, range(6))
    assert len(s) == 6 and abs(s.norm() - 1) < 1e-12
    s = qsim.coset_state(Z6, {0, 2, 4})
    assert sorted(s.amps) == [(0,), (2,), (4,)]
    assert all(abs(a - 1 / math.sqrt(3)) < 1e-15 for a in s.amps.values())
    with pytest.raises(InvalidInput):
        qsim.coset_state(Z6, set())


def test_ctrl_mult_noop(Z6):
    s = qsim.tensor(qsim.uniform_int_state(3), qsim.coset_state(Z6, {0, 2, 4}))
    out = qsim.apply_ctrl_mult(s, 0, 1, Z6, [None, None, None])
    assert out.amps == s.amps


def test_ctrl_mult_shifts_coset(Z6):
    s = qsim.tensor(qsim.basis_state((2,), (1,)), qsim.coset_state(Z6, {0, 2, 4}))
    out = qsim.apply_ctrl_mult(s, 0, 1, Z6, {1: 3})
    want = qsim.tensor(qsim.basis_state((2,), (1,)), qsim.coset_state(Z6, {3, 5, 1}))
    assert sorted(out.amps) == sorted(want.amps)
    for t in want.amps:
        assert abs(out.amps[t] - want.amps[t]) < 1e-15


def test_ctrl_mult_detects_non_unitary_row(Z6):
    rows = [list(r) for r in Z6.rows]
    rows[3][2] = rows[3][0]  # 3*0 == 3*2
    bad = Z6.with_rows(rows)
    s = qsim.tensor(qsim.basis_state((2,), (1,)), qsim.coset_state(bad, {0, 2, 4}))
    with pytest.raises(OracleNotUnitary):
        qsim.apply_ctrl_mult(s, 0, 1, bad, {1: 3})


def test_ctrl_mult_needs_gamma_register(Z6):
    s = qsim.tensor(qsim.uniform_int_state(2), qsim.uniform_int_state(3))
    with pytest.raises(InvalidRegister):
        qsim.apply_ctrl_mult(s, 0, 1, Z6, [None, 1])


def test_qft_small_cases():
    s = qsim.basis_state((1,), (0,))
    assert qsim.qft_mod(s, 0, 1).amps == s.amps
    out = qsim.qft_mod(qsim.basis_state((2,), (1,)), 0, 2)
    assert abs(out.amps[(0,)] - 1 / math.sqrt(2)) < 1e-15
    assert abs(out.amps[(1,)] + 1 / math.sqrt(2)) < 1e-15
    with pytest.raises(InvalidRegister):
        qsim.qft_mod(out, 0, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_qft_matches_dense_dft(N, other, seed):
    rng = np.random.default_rng(seed)
    s = random_state(rng, (other, N), support=7)
    got = dense(qsim.qft_mod(s, 1, N))
    # numpy's inverse DFT carries the exp(+2 pi i ab / N) sign convention
    want = np.fft.ifft(dense(s), axis=1) * math.sqrt(N)
    assert np.allclose(got, want, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_qft_round_trip(N, seed):
    rng = np.random.default_rng(seed)
    s = random_state(rng, (N, 3))
    back = qsim.qft_mod(qsim.qft_mod(s, 0, N), 0, N, inverse=True)
    assert np.allclose(dense(back), dense(s), atol=1e-9)


def test_measure_basis_state():
    s = qsim.basis_state((4, 3), (2, 1))
    rng = np.random.default_rng(0)
    for _ in range(10):
        v, post = qsim.measure(s, 0, rng)
        assert v == 2 and post.amps == s.amps


def test_measure_uniform_frequencies():
    s = qsim.uniform_int_state(4)
    rng = np.random.default_rng(12345)
    counts = np.zeros(4)
    for _ in range(10_000):
        v, _ = qsim.measure(s, 0, rng)
        counts[v] += 1
    sigma = math.sqrt(0.25 * 0.75 / 10_000)
    assert np.all(np.abs(counts / 10_000 - 0.25) <= 3 * sigma)


def test_measure_gamma_register_lands_in_coset(Z6):
    S = {1, 3, 5}
    s = qsim.tensor(qsim.basis_state((3,), (2,)), qsim.coset_state(Z6, S))
    rng = np.random.default_rng(1)
    for _ in range(20):
        v, post = qsim.measure(s, 1, rng)
        assert v in S
        assert list(post.amps) == [(2, v)]
        assert abs(abs(post.amps[(2, v)]) - 1) < 1e-12


@pytest.mark.parametrize("spec", ["cyclic:6", "dihedral:3", "quaternion", "alternating:4"])
def test_ctrl_mult_permutes_basis_on_groups(spec):
    G = generate(spec)
    N = 5
    full = qsim.SparseState((N, G.n), {(c, x): 1 / math.sqrt(N * G.n) for c in range(N) for x in range(G.n)})
    g = [None] + [(3 * c) % G.n for c in range(1, N)]
    out = qsim.apply_ctrl_mult(full, 0, 1, G, g)
    assert sorted(out.amps) == sorted(full.amps)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_operations_preserve_norm(seed):
    rng = np.random.default_rng(seed)
    G = generate("dihedral:4")
    s = random_state(rng, (4, G.n), support=10)
    s = qsim.apply_ctrl_mult(s, 0, 1, G, [None, 1, 5, 6])
    assert abs(s.norm() - 1) < 1e-9
    s = qsim.qft_mod(s, 0, 4)
    assert abs(s.norm() - 1) < 1e-9
    _, s = qsim.measure(s, 1, rng)
    assert abs(s.norm() - 1) < 1e-9


def test_measure_statistics_match_amplitudes():
    rng = np.random.default_rng(7)
    s = qsim.qft_mod(random_state(rng, (6, 2), support=5), 0, 6)
    probs = s.probabilities(0)
    N = 10_000
    counts = {}
    for _ in range(N):
        v, _ = qsim.measure(s, 0, rng)
        counts[v] = counts.get(v, 0) + 1
    for v, p in probs.items():
        sigma = math.sqrt(p * (1 - p) / N)
        assert abs(counts.get(v, 0) / N - p) <= 4 * sigma + 1e-12


def test_dump_is_sorted():
    s = qsim.tensor(qsim.uniform_int_state(2), qsim.uniform_int_state(2))
    d = s.dump()
    assert [t for t, _, _ in d] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert all(abs(re - 0.5) < 1e-15 and im == 0 for _, re, im in d)
