"""The full test: chain, per-level order + homomorphism test, then coverage.

``run_test`` never raises on a bad table.  The first subroutine failure ends
the run with a Reject verdict naming the cause; a run that gets through
every stage accepts.
"""
from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .chain import build_normal_chain, sample_generators
from .errors import Fail, NotSolvable, OracleNotUnitary, StructureFailure
from .extension import build_extension, check_automorphism, check_extension_data, trivial_group
from .homtest import TesterConfig, homomorphism_test
from .magma import MagmaTable, find_identity
from .qsub import decompose, find_relative_order
from .rng import TracedRng, run_seed

ACCEPT, REJECT = "Accept", "Reject"
CLEAN = "Clean"
NOT_SOLVABLE = "NotSolvable"
STRUCTURE_FAILURE = "StructureFailure"
ORACLE_NOT_UNITARY = "OracleNotUnitary"
HOMOMORPHISM_VIOLATION = "HomomorphismViolation"
COVERAGE_FAILURE = "CoverageFailure"


@dataclass(frozen=True)
class Verdict:
    decision: str
    reason: str
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def accepted(self) -> bool:
        return self.decision == ACCEPT

    def to_json(self) -> dict:
        return {"decision": self.decision, "reason": self.reason, "detail": self.detail}

    def __str__(self):
        if self.accepted:
            return ACCEPT
        return f"{REJECT}({self.reason})"


@dataclass
class Transcript:
    entries: list = field(default_factory=list)

    def log(self, stage: str, data, rng: TracedRng):
        self.entries.append({"stage": stage, "data": data, "rng_draws": rng.take_draws()})

    def to_json(self) -> str:
        return json.dumps(self.entries, sort_keys=True, separators=(",", ":"))

    def stages(self) -> list[str]:
        return [e["stage"] for e in self.entries]


@dataclass
class CoverageResult:
    passed: bool
    samples: list
    element: int | None = None


def coverage_test(M: MagmaTable, chain, config: TesterConfig, rng) -> CoverageResult:
    """Draw coverage_k elements; every one must decompose over H_t."""
    done = []
    for _ in range(config.coverage_k):
        x = int(rng.integers(0, M.n))
        try:
            v = decompose(M, chain, chain.t, x, rng)
        except StructureFailure:
            return CoverageResult(False, done, x)
        done.append([x, list(v)])
    return CoverageResult(True, done)


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


class _Reject(Exception):
    def __init__(self, reason, detail):
        self.reason, self.detail = reason, detail


def _levels(M: MagmaTable, config: TesterConfig, rng: TracedRng, tr: Transcript):
    e = find_identity(M, rng)
    tr.log("identity", {"e": e}, rng)
    gens = sample_generators(M, rng, config.s)
    tr.log("generators", {"gens": gens}, rng)
    chain = build_normal_chain(M, gens, e)
    tr.log("chain", {"h": list(chain.h)}, rng)

    lower = trivial_group()
    for j in range(1, chain.t + 1):
        res = find_relative_order(M, chain, j, rng, rounds=config.order_rounds)
        chain.m.append(res.m)
        chain.orders.append(res.r)
        chain.wraps.append(res.wrap)
        tr.log("relative_order", {"level": j, "r": res.r, "m": res.m, "samples": res.samples,
                                  "wrap": list(res.wrap)}, rng)

        G = build_extension(M, chain, j, lower, rng)
        if not check_automorphism(G):
            raise _Reject(STRUCTURE_FAILURE, {"level": j, "why": "conjugation by h_j is not injective"})
        if not check_extension_data(G):
            raise _Reject(STRUCTURE_FAILURE, {"level": j, "why": "extension data do not define a group"})
        phi = [[list(v) for v in row] for row in G.phi_pow]
        chain.phi_tables.append(G.phi_pow)
        tr.log("extension", {"level": j, "images": [list(v) for v in G.images], "phi_pow_sha256": _digest(phi)}, rng)

        hom = homomorphism_test(M, chain, G, config.c, rng, config.table_pair_budget)
        tr.log("homomorphism", {"level": j, "passed": hom.passed, "trials": hom.trials,
                                "witness": None if hom.witness is None else [list(w) for w in hom.witness]}, rng)
        if not hom.passed:
            raise _Reject(HOMOMORPHISM_VIOLATION, {"level": j, "witness": [list(w) for w in hom.witness]})
        lower = G

    cov = coverage_test(M, chain, config, rng)
    tr.log("coverage", {"passed": cov.passed, "samples": cov.samples, "element": cov.element}, rng)
    if not cov.passed:
        raise _Reject(COVERAGE_FAILURE, {"element": cov.element})
    return chain


def run_test(M: MagmaTable, config: TesterConfig) -> tuple[Verdict, Transcript]:
    rng = TracedRng(config.seed)
    tr = Transcript()
    tr.log("config", {**config.to_json(), "n": M.n}, rng)
    try:
        _levels(M, config, rng, tr)
        verdict = Verdict(ACCEPT, CLEAN)
    except _Reject as rej:
        verdict = Verdict(REJECT, rej.reason, rej.detail)
    except NotSolvable as exc:
        verdict = Verdict(REJECT, NOT_SOLVABLE, {"why": str(exc)})
    except OracleNotUnitary as exc:
        verdict = Verdict(REJECT, ORACLE_NOT_UNITARY, {"why": str(exc)})
    except Fail as exc:
        verdict = Verdict(REJECT, STRUCTURE_FAILURE, {"why": str(exc)})
    tr.log("verdict", verdict.to_json(), rng)
    return verdict, tr


def _one_run(args):
    M, config, index = args
    verdict, tr = run_test(M, config)
    return index, config.seed, verdict, tr


def run_many(M: MagmaTable, config: TesterConfig, runs: int, jobs: int = 1, keep_transcripts: bool = False):
    """``runs`` independent runs; run i uses seed ``run_seed(config.seed, i)``.

    Returns (index, seed, verdict, transcript-or-None) in run order.
    """
    tasks = [(M, replace(config, seed=run_seed(config.seed, i)), i) for i in range(runs)]
    if jobs > 1 and runs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_one_run, tasks, chunksize=max(1, runs // (4 * jobs))))
    else:
        results = [_one_run(t) for t in tasks]
    return [(i, s, v, tr if keep_transcripts else None) for i, s, v, tr in results]
