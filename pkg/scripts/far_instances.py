"""Corrupt small groups, certify their distance to every group by brute
force, and report how often the tester rejects them."""
import argparse
import os

from solvtest.editdist import distance_to_groups
from solvtest.harness import corrupt, generate
from solvtest.homtest import TesterConfig
from solvtest.tester import run_many

FAMILIES = ("cyclic:3", "cyclic:4", "cyclic:2*cyclic:2", "cyclic:5", "cyclic:6", "dihedral:3")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tables", type=int, default=20)
    ap.add_argument("--mode", choices=("row", "free"), default="row")
    ap.add_argument("--eps", type=float, default=0.2)
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    print("index,family,swaps,n,distance,distance_float,far,rejected,runs")
    for i in range(args.tables):
        fam, k = FAMILIES[i % len(FAMILIES)], 1 + i % 3
        B = corrupt(generate(fam), k, args.mode, seed=i)
        d = distance_to_groups(B)
        results = run_many(B, TesterConfig.from_epsilon(args.eps, seed=3 + i), args.runs, jobs=args.jobs)
        rej = sum(not v.accepted for _, _, v, _ in results)
        print(f"{i},{fam},{k},{B.n},{d},{float(d):.4f},{int(d > args.eps)},{rej},{args.runs}")


if __name__ == "__main__":
    main()
