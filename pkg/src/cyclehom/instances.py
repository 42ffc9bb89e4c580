"""Random instance families for tests and experiment scripts.

Every generator takes a `random.Random` so runs are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, build_graph, find_induced_path, is_connected, is_triangle_free
from .lists import ListAssignment, bit, pair_mask, triple_mask


@dataclass
class InstanceConfig:
    max_n: int = 14
    min_n: int = 2
    full_prob: float = 0.6      # chance a vertex keeps the full list
    single_prob: float = 0.1    # chance of a singleton (precoloured vertex)
    family: str = "mixed"       # subdivided | layered | sparse | cyclic | mixed


def _triangle_free_add(nb: list[set], edges: list, u: int, v: int) -> bool:
    if u == v or v in nb[u] or nb[u] & nb[v]:
        return False
    nb[u].add(v)
    nb[v].add(u)
    edges.append((u, v))
    return True


def subdivided_graph(rng: random.Random, max_n: int = 14, min_n: int = 2) -> Graph:
    """A small random multigraph-free base graph with every edge replaced by
    a path of 1 to 3 edges."""
    while True:
        base_n = rng.randint(2, 6)
        pairs = [(u, v) for u in range(base_n) for v in range(u + 1, base_n)]
        rng.shuffle(pairs)
        chosen = pairs[: rng.randint(base_n - 1, len(pairs))]
        n = base_n
        edges = []
        for u, v in chosen:
            m = rng.randint(1, 3)
            prev = u
            for _ in range(m - 1):
                edges.append((prev, n))
                prev = n
                n += 1
            edges.append((prev, v))
        if not min_n <= n <= max_n:
            continue
        g = build_graph(n, edges)
        if is_connected(g) and is_triangle_free(g):
            return g


def layered_graph(rng: random.Random, n: int) -> Graph:
    """Vertices spread over BFS-like layers; each vertex past layer 0 gets a
    parent in the previous layer, then extra triangle-free edges inside and
    between neighbouring layers."""
    depth = rng.randint(2, 5)
    layer = [0] + sorted(rng.randint(1, depth) for _ in range(n - 1))
    # make layers contiguous
    seen = sorted(set(layer))
    layer = [seen.index(x) for x in layer]
    nb: list[set] = [set() for _ in range(n)]
    edges: list = []
    for v in range(1, n):
        parents = [u for u in range(n) if layer[u] == layer[v] - 1]
        rng.shuffle(parents)
        for u in parents:
            if _triangle_free_add(nb, edges, u, v):
                break
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if abs(layer[u] - layer[v]) <= 1:
            _triangle_free_add(nb, edges, u, v)
    return build_graph(n, edges)


def sparse_graph(rng: random.Random, n: int) -> Graph:
    """Random tree plus a few triangle-free chords."""
    nb: list[set] = [set() for _ in range(n)]
    edges: list = []
    for v in range(1, n):
        _triangle_free_add(nb, edges, rng.randrange(v), v)
    for _ in range(rng.randint(0, n // 2 + 1)):
        _triangle_free_add(nb, edges, rng.randrange(n), rng.randrange(n))
    return build_graph(n, edges)


def cyclic_graph(rng: random.Random, n: int) -> Graph:
    """A long cycle (6 to 9 vertices) with pendant trees and triangle-free
    chords; these tend to put edges in the third layer around a small seed."""
    m = min(n, rng.randint(6, 9))
    nb: list[set] = [set() for _ in range(n)]
    edges: list = []
    for i in range(m):
        _triangle_free_add(nb, edges, i, (i + 1) % m)
    for v in range(m, n):
        _triangle_free_add(nb, edges, rng.randrange(v), v)
    for _ in range(rng.randint(0, 3)):
        _triangle_free_add(nb, edges, rng.randrange(n), rng.randrange(n))
    return build_graph(n, edges)


def p9free_graph(rng: random.Random, cfg: InstanceConfig | None = None) -> Graph:
    """Connected triangle-free P_9-free graph drawn from cfg.family."""
    cfg = cfg or InstanceConfig()
    families = ["subdivided", "layered", "sparse", "cyclic"] if cfg.family == "mixed" else [cfg.family]
    while True:
        fam = rng.choice(families)
        if fam == "subdivided":
            g = subdivided_graph(rng, cfg.max_n, cfg.min_n)
        else:
            n = rng.randint(cfg.min_n, cfg.max_n)
            maker = {"layered": layered_graph, "sparse": sparse_graph, "cyclic": cyclic_graph}[fam]
            g = maker(rng, n)
        if is_connected(g) and is_triangle_free(g) and find_induced_path(g, 9) is None:
            return g


def random_lists(rng: random.Random, n: int, k: int, cfg: InstanceConfig | None = None,
                 good: bool = True) -> ListAssignment:
    """Full lists with probability cfg.full_prob, singletons with
    cfg.single_prob, otherwise a good pair or triple (or, with good=False, a
    random nonempty subset)."""
    cfg = cfg or InstanceConfig()
    full = (1 << k) - 1
    out = []
    for _ in range(n):
        r = rng.random()
        if r < cfg.full_prob:
            out.append(full)
        elif r < cfg.full_prob + cfg.single_prob:
            out.append(bit(rng.randint(1, k), k))
        elif good:
            i = rng.randint(1, k)
            out.append(pair_mask(i, k) if rng.random() < 0.5 else triple_mask(i, k))
        else:
            out.append(rng.randint(1, full))
    return ListAssignment(k, tuple(out))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Plain G(n, p)."""
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
