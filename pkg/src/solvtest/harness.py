"""Instance generation, corruption and the table file format.

Table files are JSON documents::

    {"n": 3, "labels": ["0", "1", "2"], "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}

where ``table[i][j]`` is the index of ``labels[i] * labels[j]``.

Family specs accepted by ``generate``::

    cyclic:N  dihedral:N  symmetric:N  alternating:N  quaternion  random-latin:N
    A*B*...            direct product of group families
    padded:J:BASE      BASE (a group family) plus J junk elements
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import groups
from .errors import InvalidInput, InvalidSpec
from .magma import MagmaTable, is_group

GROUP_FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion")

# the named solvable groups used throughout the tests
NAMED = {
    "Z_12": "cyclic:12",
    "Z_2xZ_4": "cyclic:2*cyclic:4",
    "S_3": "dihedral:3",
    "D_4": "dihedral:4",
    "Q_8": "quaternion",
    "A_4": "alternating:4",
    "S_4": "symmetric:4",
}


def _int_arg(name, arg):
    try:
        return int(arg)
    except (TypeError, ValueError):
        raise InvalidSpec(f"{name} needs an integer argument, got {arg!r}") from None


def _atom(spec: str) -> MagmaTable:
    name, _, arg = spec.partition(":")
    if name == "quaternion":
        if arg:
            raise InvalidSpec("quaternion takes no argument")
        return groups.quaternion()
    makers = {"cyclic": groups.cyclic, "dihedral": groups.dihedral,
              "symmetric": groups.symmetric, "alternating": groups.alternating}
    if name not in makers:
        raise InvalidSpec(f"unknown group family {name!r}")
    return makers[name](_int_arg(name, arg))


def group_from_spec(spec: str) -> MagmaTable:
    parts = [p.strip() for p in spec.split("*")]
    if not all(parts):
        raise InvalidSpec(f"malformed product spec {spec!r}")
    G = groups.direct_product(*(_atom(p) for p in parts))
    if not is_group(G):
        raise AssertionError(f"{spec} did not produce a group table")
    return G


def generate(spec: str, seed: int = 0) -> MagmaTable:
    spec = spec.strip()
    rng = np.random.default_rng(seed)
    if spec.startswith("random-latin:"):
        return groups.random_latin(_int_arg("random-latin", spec.split(":", 1)[1]), rng)
    if spec.startswith("padded:"):
        parts = spec.split(":", 2)
        if len(parts) != 3:
            raise InvalidSpec("padded spec is padded:J:BASE")
        _, junk, base = parts
        return groups.padded(group_from_spec(base), _int_arg("padded", junk), rng)
    return group_from_spec(spec)


def corrupt(M: MagmaTable, k: int, mode: str = "row", seed: int = 0) -> MagmaTable:
    """k row-internal swaps (``row``) or k overwritten cells (``free``)."""
    if k < 1:
        raise InvalidInput("corruption needs k >= 1")
    rng = np.random.default_rng(seed)
    rows = [list(r) for r in M.rows]
    n = M.n
    if mode == "row":
        if n < 2:
            raise InvalidInput("row swaps need n >= 2")
        for _ in range(k):
            a = int(rng.integers(0, n))
            i, j = (int(v) for v in rng.choice(n, size=2, replace=False))
            rows[a][i], rows[a][j] = rows[a][j], rows[a][i]
    elif mode == "free":
        for _ in range(k):
            a, b, v = (int(x) for x in rng.integers(0, n, size=3))
            rows[a][b] = v
    else:
        raise InvalidInput(f"unknown corruption mode {mode!r}")
    return M.with_rows(rows)


def table_to_json(M: MagmaTable) -> dict:
    return {"n": M.n, "labels": list(M.labels), "table": [list(r) for r in M.rows]}


def table_from_json(doc) -> MagmaTable:
    """Parse a table document, naming the first bad field on error."""
    if not isinstance(doc, dict):
        raise InvalidInput("document: expected a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidInput("n: expected a positive integer")
    labels = doc.get("labels")
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise InvalidInput(f"labels: expected an array of {n} strings")
    if len(set(labels)) != n:
        raise InvalidInput("labels: entries must be distinct")
    table = doc.get("table")
    if not isinstance(table, list) or len(table) != n:
        raise InvalidInput(f"table: expected an array of {n} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise InvalidInput(f"table[{i}]: expected an array of {n} integers")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InvalidInput(f"table[{i}][{j}]: expected an integer in [0, {n})")
    return MagmaTable.from_rows(table, labels)


def save_table(M: MagmaTable, path) -> None:
    Path(path).write_text(json.dumps(table_to_json(M)) + "\n")


def load_table(path) -> MagmaTable:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"document: not valid JSON ({exc})") from None
    return table_from_json(doc)
