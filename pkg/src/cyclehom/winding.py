"""Slopes of walks under a C_k-colouring, and the localized solver for k >= 10.

A connected P_t-free graph maps into C_k (k >= t+1) inside a window of t-1
consecutive colours, so for P_9-free graphs and k >= 10 it is enough to try
the k windows of 8 colours, each of which is an induced path of C_k.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import NotAWalk, NotP9Free
from .graph import Graph, connected_components, find_induced_path, induced_subgraph, two_coloring
from .lists import ListAssignment, Target, ac_masks, bit, cycle_target, min_color, path_target
from .oracle import verify

WINDOW = 8


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: frozenset  # (u, v) means u -> v

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs


def orient_by_hom(g: Graph, f: Sequence[int] | Mapping[int, int], k: int) -> OrientedGraph:
    """u -> v when f(v) = f(u) + 1 (mod k), otherwise v -> u."""
    arcs = set()
    for u, v in g.edges:
        if (f[v] - f[u]) % k == 1:
            arcs.add((u, v))
        elif (f[u] - f[v]) % k == 1:
            arcs.add((v, u))
        else:
            raise ValueError(f"edge {u}{v} is not mapped to an edge of C_{k}")
    return OrientedGraph(g.n, frozenset(arcs))


def slope(og: OrientedGraph, walk: Sequence[int]) -> int:
    """Forward steps minus backward steps."""
    s = 0
    for u, v in zip(walk, walk[1:]):
        if (u, v) in og.arcs:
            s += 1
        elif (v, u) in og.arcs:
            s -= 1
        else:
            raise NotAWalk(f"{u} and {v} are not adjacent")
    return s


def image_window(f: Sequence[int] | Mapping[int, int], k: int) -> tuple[int, int]:
    """(start, length) of the shortest cyclic colour interval start..start+length-1
    containing every value of f; ties go to the smallest start."""
    values = f.values() if isinstance(f, Mapping) else f
    used = sorted(set(values))
    if not used:
        return (1, 0)
    best = None
    for start in used:
        length = max((c - start) % k for c in used) + 1
        if best is None or length < best[1] or (length == best[1] and start < best[0]):
            best = (start, length)
    return best


def potentials(g: Graph, f: Sequence[int], k: int) -> list[int] | None:
    """Integer lift p with p(v) = f(v) mod k and |p(u) - p(v)| = 1 on edges,
    fixed by p = f at the smallest vertex of each component. None if some
    closed walk has nonzero slope."""
    og = orient_by_hom(g, f, k)
    p: list[int | None] = [None] * g.n
    for comp in connected_components(g):
        root = comp[0]
        p[root] = f[root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                step = 1 if (u, w) in og.arcs else -1
                if p[w] is None:
                    p[w] = p[u] + step
                    stack.append(w)
                elif p[w] != p[u] + step:
                    return None
    return p  # type: ignore[return-value]


# --- list homomorphism to a path -------------------------------------------

def solve_path_hom(g: Graph, masks: Sequence[int], t: int) -> list[int] | None:
    """List homomorphism of g to the path 1-2-...-t.

    Per component: fix which side of the bipartition takes odd positions (two
    tries), run arc consistency, then give each vertex its smallest surviving
    position.
    """
    target = path_target(t)
    odd = sum(1 << (c - 1) for c in range(1, t + 1, 2))
    even = target.full & ~odd
    out = [0] * g.n
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        side = two_coloring(sub.graph)
        if side is None:
            return None
        found = None
        for first in (odd, even):
            other = target.full & ~first
            local = [masks[v] & (first if side[i] == 0 else other) for i, v in enumerate(sub.original)]
            if any(m == 0 for m in local):
                continue
            if not ac_masks(sub.graph, local, target):
                continue
            found = [min_color(m) for m in local]
            break
        if found is None:
            return None
        for i, v in enumerate(sub.original):
            out[v] = found[i]
    return out


def solve_localized(g: Graph, lists: ListAssignment, k: int, check_p9: bool = True) -> list[int] | None:
    """Window-by-window solver for P_9-free graphs and k >= 10."""
    if k < 10:
        raise ValueError("the localized solver needs k >= 10")
    col = [0] * g.n
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        h = sub.graph
        if check_p9 and find_induced_path(h, 9) is not None:
            raise NotP9Free("component contains an induced P_9")
        found = None
        for j in range(1, k + 1):
            # window colours j, j+1, ..., j+7 become path positions 1..8
            window = [((j - 1 + p) % k) + 1 for p in range(WINDOW)]
            local = []
            for v in sub.original:
                m = 0
                for p, c in enumerate(window):
                    if lists.masks[v] >> (c - 1) & 1:
                        m |= 1 << p
                local.append(m)
            if any(m == 0 for m in local):
                continue
            pos = solve_path_hom(h, local, WINDOW)
            if pos is not None:
                found = [window[p - 1] for p in pos]
                break
        if found is None:
            return None
        for i, v in enumerate(sub.original):
            col[v] = found[i]
    if not verify(g, lists, cycle_target(k), col):
        raise AssertionError("localized solver produced an invalid colouring")
    return col
