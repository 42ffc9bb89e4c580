"""Compare the layered solver (k = 5, 7, 9) and the localized solver (k >= 10)
with the brute-force oracle on random P_9-free instances.

    python3 scripts/oracle_equivalence.py --count 2000 --max-n 16 --seed 1
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter

from cyclehom.instances import InstanceConfig, p9free_graph, random_lists
from cyclehom.lists import cycle_target
from cyclehom.oracle import solve_exact, verify
from cyclehom.solver import SolveStats, solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--ks", type=int, nargs="+", default=[5, 7, 9, 10, 11])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    t0 = time.perf_counter()
    for i in range(args.count):
        k = args.ks[i % len(args.ks)]
        cfg = InstanceConfig(max_n=args.max_n, full_prob=rng.choice([0.3, 0.6, 0.9]))
        g = p9free_graph(rng, cfg)
        lists = random_lists(rng, g.n, k, cfg)
        stats = SolveStats()
        got = solve(g, lists, k, stats)
        want = solve_exact(g, lists)
        tally["sat" if want is not None else "unsat"] += 1
        tally["phase3"] += stats.entered_phase3
        if (got is None) != (want is None):
            tally["mismatch"] += 1
            print(f"mismatch: k={k} n={g.n} edges={list(g.edges)} lists={lists.masks}")
        elif got is not None and not verify(g, lists, cycle_target(k), got):
            tally["invalid"] += 1
    dt = time.perf_counter() - t0
    print(f"{args.count} instances in {dt:.1f}s: " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())))


if __name__ == "__main__":
    main()
