"""Command line entry point.

Exit codes: 0 majority accept (or success), 1 majority reject (or a
reported problem), 2 invalid input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import editdist, harness
from .errors import InvalidConfig, InvalidInput, InvalidSpec, Unavailable
from .homtest import TesterConfig
from .magma import row_bijective
from .tester import run_many

EXIT_ACCEPT, EXIT_REJECT, EXIT_INVALID = 0, 1, 2


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _transcript_path(base: Path, index: int, runs: int) -> Path:
    if runs == 1:
        return base
    return base.with_name(f"{base.stem}.{index}{base.suffix}")


def cmd_test(args) -> int:
    M = harness.load_table(args.table)
    config = TesterConfig.from_epsilon(args.epsilon, seed=args.seed)
    if args.runs < 1:
        raise InvalidConfig("--runs must be >= 1")
    results = run_many(M, config, args.runs, jobs=args.jobs, keep_transcripts=args.transcript is not None)
    accepted = 0
    for index, seed, verdict, tr in results:
        accepted += verdict.accepted
        print(f"run {index} seed {seed} {verdict}")
        if tr is not None:
            _transcript_path(Path(args.transcript), index, args.runs).write_text(tr.to_json() + "\n")
    print(f"accepted {accepted}/{args.runs} fraction {accepted / args.runs:.4f}")
    return EXIT_ACCEPT if 2 * accepted > args.runs else EXIT_REJECT


def cmd_gen(args) -> int:
    M = harness.generate(args.family, args.seed)
    if args.corrupt:
        M = harness.corrupt(M, args.corrupt, args.mode, args.seed)
    harness.save_table(M, args.output)
    print(f"wrote {args.output} (n={M.n})")
    return EXIT_ACCEPT


def _show(d) -> None:
    print(f"{d} {float(d):.6f}")


def cmd_dist(args) -> int:
    _show(editdist.table_edit_distance(harness.load_table(args.a), harness.load_table(args.b)))
    return EXIT_ACCEPT


def cmd_dist_to_groups(args) -> int:
    _show(editdist.distance_to_groups(harness.load_table(args.a)))
    return EXIT_ACCEPT


def cmd_oracle_check(args) -> int:
    M = harness.load_table(args.table)
    bad = [a for a in range(M.n) if not row_bijective(M, a)]
    for a in bad:
        print(f"row {a} ({M.labels[a]}) is not a permutation")
    if not bad:
        print(f"all {M.n} rows are permutations")
    return EXIT_REJECT if bad else EXIT_ACCEPT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="solvtest", description="Test whether a Cayley table is a solvable group.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="run the tester")
    t.add_argument("--table", required=True)
    t.add_argument("--epsilon", required=True, help="distance parameter, e.g. 0.1 or 1/10")
    t.add_argument("--seed", type=_u64, default=0)
    t.add_argument("--transcript", help="write the JSON transcript here (FILE.i.ext per run when --runs > 1)")
    t.add_argument("--runs", type=int, default=1)
    t.add_argument("--jobs", type=int, default=1, help="worker processes")
    t.set_defaults(func=cmd_test)

    g = sub.add_parser("gen", help="generate a table")
    g.add_argument("--family", required=True)
    g.add_argument("--corrupt", type=int, default=0)
    g.add_argument("--mode", choices=("row", "free"), default="row")
    g.add_argument("--seed", type=_u64, default=0)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("dist", help="exact edit distance between two tables")
    d.add_argument("--a", required=True)
    d.add_argument("--b", required=True)
    d.set_defaults(func=cmd_dist)

    dg = sub.add_parser("dist-to-groups", help="exact distance to the nearest small group")
    dg.add_argument("--a", required=True)
    dg.set_defaults(func=cmd_dist_to_groups)

    o = sub.add_parser("oracle-check", help="list rows that are not permutations")
    o.add_argument("--table", required=True)
    o.set_defaults(func=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, InvalidSpec, InvalidConfig, Unavailable, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
