"""Seeded randomness with a record of what was drawn.

``TracedRng`` wraps a numpy ``Generator`` and keeps a running digest of every
value it hands out, so transcript entries can say which draws produced them.
Any object with ``integers(low, high=None, size=None)`` and ``random()``
works wherever an rng is expected; plain ``numpy.random.default_rng`` is fine
for library use.
"""
from __future__ import annotations

import hashlib

import numpy as np

_KEEP_VALUES = 64


def run_seed(master_seed: int, run_index: int) -> int:
    """Seed for run ``run_index`` of a multi-run invocation.

    Mixing function: the first 64-bit word of
    ``numpy.random.SeedSequence([master_seed, run_index]).generate_state(1, uint64)``.
    """
    ss = np.random.SeedSequence([int(master_seed), int(run_index)])
    return int(ss.generate_state(1, np.uint64)[0])


class TracedRng:
    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))
        self._reset()

    def _reset(self):
        self._count = 0
        self._hash = hashlib.sha256()
        self._values: list | None = []

    def _record(self, arr: np.ndarray, as_float: bool):
        flat = arr.ravel()
        self._count += flat.size
        if as_float:
            self._hash.update(flat.astype("<f8").tobytes())
        else:
            self._hash.update(flat.astype("<i8").tobytes())
        if self._values is not None:
            if self._count <= _KEEP_VALUES:
                self._values.extend(flat.tolist())
            else:
                self._values = None

    def integers(self, low, high=None, size=None):
        out = self._gen.integers(low, high, size=size)
        self._record(np.asarray(out), as_float=False)
        return int(out) if size is None else out

    def random(self, size=None):
        out = self._gen.random(size=size)
        self._record(np.asarray(out), as_float=True)
        return float(out) if size is None else out

    def take_draws(self) -> dict:
        """Summary of the draws since the last call, then start a new window."""
        rec = {"count": self._count, "sha256": self._hash.hexdigest()}
        if self._values is not None:
            rec["values"] = list(self._values)
        self._reset()
        return rec
