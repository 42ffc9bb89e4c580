"""For each t and k, the widest colour window used by any C_k-colouring of a
connected P_t-free graph from a random sample. The bound being probed is t - 1.

    python3 scripts/localization_sweep.py --graphs 300 --max-n 9
"""
from __future__ import annotations

import argparse
import random

from cyclehom.graph import find_induced_path, is_connected
from cyclehom.instances import random_graph
from cyclehom.oracle import enumerate_all
from cyclehom.lists import cycle_target
from cyclehom.winding import image_window


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    widest: dict[tuple[int, int], int] = {}
    made = 0
    while made < args.graphs:
        g = random_graph(rng, rng.randint(2, args.max_n), rng.choice([0.25, 0.4, 0.6]))
        if not is_connected(g):
            continue
        made += 1
        for t in range(4, 9):
            if find_induced_path(g, t) is not None:
                continue
            for k in range(t + 1, t + 5):
                homs = enumerate_all(g, None, cycle_target(k), cap=20000)
                w = max((image_window(f, k)[1] for f in homs), default=0)
                widest[t, k] = max(widest.get((t, k), 0), w)
    print(" t  k  widest  bound")
    for (t, k), w in sorted(widest.items()):
        flag = "" if w <= t - 1 else "  VIOLATION"
        print(f"{t:2d} {k:2d} {w:6d} {t - 1:6d}{flag}")


if __name__ == "__main__":
    main()
