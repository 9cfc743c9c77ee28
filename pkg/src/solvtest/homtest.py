"""Parameters from epsilon, the sampled homomorphism test, and its exact oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chain import ExponentVector, NormalChain
from .errors import InvalidConfig, Unavailable
from .extension import ExtensionGroup, psi
from .magma import MagmaTable

# 151 * eta <= eps / 2, and eta strictly below 1/120
CLOSENESS_FACTOR = 151
ETA_CAP = Fraction(1, 121)
TRIALS_PER_INV_ETA = 2
COVERAGE_PER_INV_EPS = 4

# above this many pairs, trials run one by one instead of through a lookup table
TABLE_PAIR_BUDGET = 1 << 16


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def eta_from_epsilon(epsilon) -> Fraction:
    eps = as_fraction(epsilon)
    if not 0 < eps <= 1:
        raise InvalidConfig(f"epsilon must lie in (0, 1], got {epsilon}")
    return min(eps / (2 * CLOSENESS_FACTOR), ETA_CAP)


def trials_from_eta(eta: Fraction) -> int:
    return math.ceil(TRIALS_PER_INV_ETA / eta)


def coverage_from_epsilon(epsilon) -> int:
    return math.ceil(COVERAGE_PER_INV_EPS / as_fraction(epsilon))


@dataclass(frozen=True)
class TesterConfig:
    epsilon: Fraction
    eta: Fraction
    c: int
    coverage_k: int
    seed: int = 0
    s: int | None = None  # generator count; None means ceil(log2 n) + 4
    order_rounds: int = 3
    table_pair_budget: int = TABLE_PAIR_BUDGET

    def __post_init__(self):
        if not 0 < self.epsilon <= 1:
            raise InvalidConfig(f"epsilon must lie in (0, 1], got {self.epsilon}")
        if self.eta <= 0 or self.c < 1 or self.coverage_k < 1 or self.order_rounds < 1:
            raise InvalidConfig("eta, c, coverage_k and order_rounds must be positive")
        if self.s is not None and self.s < 1:
            raise InvalidConfig("s must be positive")
        if not 0 <= self.seed < 1 << 64:
            raise InvalidConfig("seed must be an unsigned 64-bit integer")

    @classmethod
    def from_epsilon(cls, epsilon, seed: int = 0, **overrides) -> "TesterConfig":
        eps = as_fraction(epsilon)
        eta = eta_from_epsilon(eps)
        kw = dict(epsilon=eps, eta=eta, c=trials_from_eta(eta), coverage_k=coverage_from_epsilon(eps), seed=seed)
        kw.update(overrides)
        return cls(**kw)

    def to_json(self) -> dict:
        return {
            "epsilon": str(self.epsilon),
            "eta": str(self.eta),
            "c": self.c,
            "coverage_k": self.coverage_k,
            "seed": self.seed,
            "s": self.s,
            "order_rounds": self.order_rounds,
        }


@dataclass
class HomTestResult:
    passed: bool
    trials: int
    witness: tuple[ExponentVector, ExponentVector] | None = None


def _draw_pairs(G: ExtensionGroup, c: int, rng) -> tuple[np.ndarray, np.ndarray]:
    """c uniform pairs of G-elements, each coordinate drawn on its own."""
    cols = []
    for _ in range(2):
        coords = [np.asarray(rng.integers(0, r, size=c), dtype=np.int64) for r in G.radices]
        cols.append(np.stack(coords, axis=1) if coords else np.zeros((c, 0), dtype=np.int64))
    return cols[0], cols[1]


def _flat_index(G: ExtensionGroup, X: np.ndarray) -> np.ndarray:
    idx = np.zeros(X.shape[0], dtype=np.int64)
    for col, r in enumerate(G.radices):
        idx = idx * r + X[:, col]
    return idx


def violation_matrix(M: MagmaTable, chain: NormalChain, G: ExtensionGroup) -> np.ndarray:
    """viol[x, y] is True where psi(x o y) != psi(x) * psi(y), by flat index."""
    elems = list(G.elements())
    images = np.array([psi(M, chain, G.level, x) for x in elems], dtype=np.int64)
    prod = np.array([[G.index(G.mul(x, y)) for y in elems] for x in elems], dtype=np.int64).reshape(len(elems), len(elems))
    return images[prod] != M.array[images[:, None], images[None, :]]


def homomorphism_test(M: MagmaTable, chain: NormalChain, G: ExtensionGroup, c: int, rng,
                      table_pair_budget: int = TABLE_PAIR_BUDGET) -> HomTestResult:
    """c sampled pairs; fails on the first pair where psi is not multiplicative."""
    X, Y = _draw_pairs(G, c, rng)
    if G.size ** 2 <= table_pair_budget:
        viol = violation_matrix(M, chain, G)
        bad = np.flatnonzero(viol[_flat_index(G, X), _flat_index(G, Y)])
        if bad.size == 0:
            return HomTestResult(True, c)
        i = int(bad[0])
    else:
        rows = M.rows
        j = G.level
        for i in range(c):
            x, y = tuple(X[i].tolist()), tuple(Y[i].tolist())
            if psi(M, chain, j, G.mul(x, y)) != rows[psi(M, chain, j, x)][psi(M, chain, j, y)]:
                break
        else:
            return HomTestResult(True, c)
    return HomTestResult(False, i + 1, (tuple(X[i].tolist()), tuple(Y[i].tolist())))


def exact_violation_rate(M: MagmaTable, chain: NormalChain, G: ExtensionGroup, budget: int = 10_000) -> Fraction:
    """Fraction of ordered pairs (x, y) with psi(x o y) != psi(x) * psi(y), by enumeration."""
    size = G.size
    if size * size > budget:
        raise Unavailable(f"{size}^2 pairs exceed the enumeration budget {budget}")
    j = G.level
    elems = list(G.elements())
    image = {x: psi(M, chain, j, x) for x in elems}
    bad = 0
    for x in elems:
        for y in elems:
            if psi(M, chain, j, G.mul(x, y)) != M.rows[image[x]][image[y]]:
                bad += 1
    return Fraction(bad, size * size)
