"""Sparse simulation of the registers used by the quantum subroutines.

A state is a map from basis tuples (one value per register) to complex
amplitudes.  The states that occur here live on cosets of small subgroups,
so a dict is much smaller than the dense product space.
"""
from __future__ import annotations

import cmath
import math
from collections import defaultdict
from typing import Mapping, Sequence

from .errors import InvalidDimension, InvalidInput, InvalidRegister, OracleNotUnitary
from .magma import MagmaTable

PRUNE = 1e-12
NORM_TOL = 1e-9


class SparseState:
    __slots__ = ("dims", "amps")

    def __init__(self, dims: Sequence[int], amps: Mapping[tuple, complex]):
        self.dims = tuple(int(d) for d in dims)
        if any(d < 1 for d in self.dims):
            raise InvalidDimension(f"register dimensions must be >= 1, got {self.dims}")
        self.amps = dict(amps)

    def __len__(self):
        return len(self.amps)

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amps.values()))

    def probabilities(self, reg: int) -> dict[int, float]:
        probs: dict[int, float] = defaultdict(float)
        for t, a in self.amps.items():
            probs[t[reg]] += abs(a) ** 2
        return dict(probs)

    def inner(self, other: "SparseState") -> complex:
        """<self|other>."""
        return sum((a.conjugate() * other.amps.get(t, 0j) for t, a in self.amps.items()), 0j)

    def dump(self) -> list[tuple[tuple, float, float]]:
        return [(t, self.amps[t].real, self.amps[t].imag) for t in sorted(self.amps)]

    def __repr__(self):
        return f"SparseState(dims={self.dims}, support={len(self.amps)})"


def _normalized(dims, amps: dict) -> SparseState:
    amps = {t: a for t, a in amps.items() if abs(a) >= PRUNE}
    norm = math.sqrt(sum(abs(a) ** 2 for a in amps.values()))
    if norm == 0.0:
        raise InvalidInput("state has zero norm")
    return SparseState(dims, {t: a / norm for t, a in amps.items()})


def uniform_int_state(N: int) -> SparseState:
    if N < 1:
        raise InvalidDimension(f"Z_N register needs N >= 1, got {N}")
    amp = complex(1.0 / math.sqrt(N))
    return SparseState((N,), {(a,): amp for a in range(N)})


def coset_state(M: MagmaTable, members) -> SparseState:
    members = sorted(set(int(x) for x in members))
    if not members:
        raise InvalidInput("coset state needs at least one member")
    if members[0] < 0 or members[-1] >= M.n:
        raise InvalidInput("coset member outside the ground set")
    amp = complex(1.0 / math.sqrt(len(members)))
    return SparseState((M.n,), {(x,): amp for x in members})


def basis_state(dims: Sequence[int], values: Sequence[int]) -> SparseState:
    return SparseState(dims, {tuple(values): 1 + 0j})


def tensor(*states: SparseState) -> SparseState:
    dims: tuple = ()
    amps: dict = {(): 1 + 0j}
    for s in states:
        dims += s.dims
        amps = {t + u: a * b for t, a in amps.items() for u, b in s.amps.items()}
    return SparseState(dims, amps)


def apply_ctrl_mult(state: SparseState, ctrl: int, target: int, M: MagmaTable, g) -> SparseState:
    """|..c..x..> -> |..c..g(c)*x..>; ``g[c] is None`` means no multiplication.

    ``g`` is anything indexable by control value (list or dict).
    """
    if state.dims[target] != M.n:
        raise InvalidRegister(f"register {target} has dimension {state.dims[target]}, not |Gamma|={M.n}")
    rows = M.rows
    out: dict = {}
    seen: dict[int, dict[int, int]] = defaultdict(dict)
    for t, a in state.amps.items():
        c = t[ctrl]
        k = g[c]
        if k is None:
            out[t] = a
            continue
        x = t[target]
        y = rows[k][x]
        prev = seen[c].setdefault(y, x)
        if prev != x:
            raise OracleNotUnitary(f"row {k} maps both {prev} and {x} to {y}")
        u = list(t)
        u[target] = y
        out[tuple(u)] = a
    return SparseState(state.dims, out)


def _roots(N: int) -> list[complex]:
    return [cmath.exp(2j * math.pi * k / N) for k in range(N)]


def qft_mod(state: SparseState, reg: int, N: int, inverse: bool = False) -> SparseState:
    """|a> -> N^(-1/2) sum_b exp(+-2 pi i a b / N) |b> on register ``reg``."""
    if not 0 <= reg < len(state.dims) or state.dims[reg] != N:
        raise InvalidRegister(f"register {reg} is not a Z_{N} register in {state.dims}")
    if N == 1:
        return state
    roots = _roots(N)
    sign = -1 if inverse else 1
    scale = 1.0 / math.sqrt(N)
    out: dict = defaultdict(complex)
    for t, a in state.amps.items():
        x = t[reg]
        head, tail = t[:reg], t[reg + 1:]
        amp = a * scale
        for b in range(N):
            out[head + (b,) + tail] += amp * roots[(sign * x * b) % N]
    return _normalized(state.dims, out)


def measure(state: SparseState, reg: int, rng) -> tuple[int, SparseState]:
    """Born-rule measurement of one register; returns (value, collapsed state)."""
    probs = state.probabilities(reg)
    values = sorted(probs)
    total = sum(probs.values())
    u = rng.random() * total
    acc = 0.0
    value = values[-1]
    for v in values:
        acc += probs[v]
        if u < acc:
            value = v
            break
    kept = {t: a for t, a in state.amps.items() if t[reg] == value}
    return value, _normalized(state.dims, kept)
