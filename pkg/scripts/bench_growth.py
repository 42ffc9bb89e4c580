"""Wall time of the solver against n, for a qualitative look at growth.

    python3 scripts/bench_growth.py --k 7 --sizes 10 20 40 80 --reps 5
"""
from __future__ import annotations

import argparse
import random
import statistics
import time

from cyclehom.instances import InstanceConfig, p9free_graph, random_lists
from cyclehom.solver import SolveStats, solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=7)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--full-prob", type=float, default=0.95, help="chance a vertex keeps all k colours")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print("    n  sat  median_s   seed_s  branch_s    2sat_s  nodes")
    for n in args.sizes:
        cfg = InstanceConfig(max_n=n, min_n=n, family="layered",
                            full_prob=args.full_prob, single_prob=0.02)
        times, parts, nodes, sat = [], {"seed": [], "branching": [], "2sat": []}, [], 0
        for _ in range(args.reps):
            g = p9free_graph(rng, cfg)
            lists = random_lists(rng, g.n, args.k, cfg)
            stats = SolveStats()
            t0 = time.perf_counter()
            sat += solve(g, lists, args.k, stats) is not None
            times.append(time.perf_counter() - t0)
            for key in parts:
                parts[key].append(stats.timings.get(key, 0.0))
            nodes.append(stats.nodes)
        med = {key: statistics.median(v) for key, v in parts.items()}
        print(f"{n:5d} {sat:4d} {statistics.median(times):9.4f} {med['seed']:8.4f} {med['branching']:9.4f} "
              f"{med['2sat']:9.4f} {int(statistics.median(nodes)):6d}")


if __name__ == "__main__":
    main()
