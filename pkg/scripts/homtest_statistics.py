"""Single-run homomorphism-test failure frequency against 1 - (1 - rho)^c.

Instances take the chain from a genuine group and evaluate the comparison
map on a copy of the table with a few in-row swaps.
"""
import argparse
import math

import numpy as np

from solvtest.chain import build_normal_chain
from solvtest.extension import build_extension, trivial_group
from solvtest.harness import corrupt, generate
from solvtest.homtest import exact_violation_rate, homomorphism_test
from solvtest.qsub import find_relative_order


def genuine_level(M, rng):
    e = next(a for a in range(M.n) if list(M.rows[a]) == list(range(M.n)))
    chain = build_normal_chain(M, range(M.n), e)
    G = trivial_group()
    for j in range(1, chain.t + 1):
        res = find_relative_order(M, chain, j, rng)
        chain.m.append(res.m)
        chain.orders.append(res.r)
        chain.wraps.append(res.wrap)
        G = build_extension(M, chain, j, G, rng)
    return chain, G


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", nargs="+", default=["symmetric:4", "alternating:4", "cyclic:12", "dihedral:4"])
    ap.add_argument("--swaps", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--c", type=int, nargs="+", default=[10, 100, 604])
    ap.add_argument("--trials", type=int, default=10_000)
    args = ap.parse_args()

    print("family,swaps,rho,c,trials,failures,frequency,predicted,z_score")
    for fam in args.families:
        M = generate(fam)
        chain, G = genuine_level(M, np.random.default_rng(0))
        for swaps in args.swaps:
            bad = corrupt(M, swaps, "row", seed=swaps)
            rho = exact_violation_rate(bad, chain, G)
            for c in args.c:
                fails = sum(not homomorphism_test(bad, chain, G, c, np.random.default_rng(s)).passed
                            for s in range(args.trials))
                p = 1 - (1 - float(rho)) ** c
                sigma = math.sqrt(p * (1 - p) / args.trials)
                z = (fails / args.trials - p) / sigma if sigma else 0.0
                print(f"{fam},{swaps},{rho},{c},{args.trials},{fails},{fails / args.trials:.4f},{p:.4f},{z:+.2f}")


if __name__ == "__main__":
    main()
