"""Acceptance counts for the named solvable groups over a grid of epsilons.

    python scripts/completeness_sweep.py --runs 100 --eps 0.05 0.1 0.2
"""
import argparse
import os
from collections import Counter

from solvtest.harness import NAMED, generate
from solvtest.homtest import TesterConfig
from solvtest.tester import run_many


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--eps", type=float, nargs="+", default=[0.05, 0.1, 0.2])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--groups", nargs="+", default=list(NAMED), help=f"subset of {', '.join(NAMED)}")
    args = ap.parse_args()

    print("group,epsilon,runs,accepted,fraction,reject_reasons")
    for name in args.groups:
        M = generate(NAMED[name])
        for eps in args.eps:
            results = run_many(M, TesterConfig.from_epsilon(eps, seed=args.seed), args.runs, jobs=args.jobs)
            acc = sum(v.accepted for _, _, v, _ in results)
            reasons = Counter(v.reason for _, _, v, _ in results if not v.accepted)
            tag = ";".join(f"{r}={k}" for r, k in sorted(reasons.items()))
            print(f"{name},{eps},{args.runs},{acc},{acc / args.runs:.4f},{tag}")


if __name__ == "__main__":
    main()
