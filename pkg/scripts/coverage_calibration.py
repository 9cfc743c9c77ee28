"""Rejection rate on padded groups against the coverage-test prediction.

A group of order g padded with J junk elements has a fraction J/(g+J) of
elements outside the chain; coverage alone misses with probability
(1 - J/(g+J))^k for k = ceil(4/eps) samples.
"""
import argparse
import os
from collections import Counter

from solvtest.harness import generate
from solvtest.homtest import TesterConfig, coverage_from_epsilon
from solvtest.tester import run_many


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--base", default="dihedral:8")
    ap.add_argument("--junk", type=int, nargs="+", default=[1, 2, 4, 8])
    ap.add_argument("--eps", type=float, nargs="+", default=[0.2, 0.5, 1.0])
    ap.add_argument("--runs", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    print("base,junk,epsilon,coverage_k,runs,rejected,rate,coverage_prediction,reasons")
    for junk in args.junk:
        P = generate(f"padded:{junk}:{args.base}", seed=args.seed)
        outside = junk / P.n
        for eps in args.eps:
            k = coverage_from_epsilon(eps)
            results = run_many(P, TesterConfig.from_epsilon(eps, seed=args.seed), args.runs, jobs=args.jobs)
            rej = sum(not v.accepted for _, _, v, _ in results)
            reasons = Counter(v.reason for _, _, v, _ in results if not v.accepted)
            tag = ";".join(f"{r}={c}" for r, c in sorted(reasons.items()))
            pred = 1 - (1 - outside) ** k
            print(f"{args.base},{junk},{eps},{k},{args.runs},{rej},{rej / args.runs:.4f},{pred:.4f},{tag}")


if __name__ == "__main__":
    main()
