"""Exact list-homomorphism search used as ground truth.

Backtracking with arc-consistency propagation after every decision. The
branching vertex is the one with the fewest remaining colours (ties: lowest
id); colours are tried in increasing order. No learning, no restarts.
"""
from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from .errors import CapExceeded
from .graph import Graph
from .lists import ListAssignment, Target, ac_masks, cycle_target, min_color, popcount


def verify(g: Graph, lists: ListAssignment | None, target: Target,
           f: Sequence[int] | Mapping[int, int]) -> bool:
    """True iff f is a homomorphism to target that respects the lists."""
    try:
        col = [f[v] for v in range(g.n)]
    except (KeyError, IndexError):
        return False
    for v, c in enumerate(col):
        if not isinstance(c, int) or not 1 <= c <= target.size:
            return False
        if lists is not None and not lists.masks[v] >> (c - 1) & 1:
            return False
    return all(target.adjacent(col[u], col[v]) for u, v in g.edges)


def _pick(masks: list[int]) -> int | None:
    best = None
    best_size = 0
    for v, m in enumerate(masks):
        size = popcount(m)
        if size > 1 and (best is None or size < best_size):
            best, best_size = v, size
            if size == 2:
                break
    return best


def _search(g: Graph, masks: list[int], target: Target) -> Iterator[list[int]]:
    if any(m == 0 for m in masks):
        return
    root = list(masks)
    if not ac_masks(g, root, target):
        return
    stack = [(root, _pick(root), root[_pick(root)] if _pick(root) is not None else 0)]
    while stack:
        m, v, remaining = stack.pop()
        if v is None:
            yield m
            continue
        while remaining:
            low = remaining & -remaining
            remaining ^= low
            child = list(m)
            child[v] = low
            if ac_masks(g, child, target, [v]):
                stack.append((m, v, remaining))
                w = _pick(child)
                stack.append((child, w, child[w] if w is not None else 0))
                break


def solve_exact(g: Graph, lists: ListAssignment | None, target: Target | None = None) -> list[int] | None:
    """First colouring in search order, or None. Target defaults to C_k."""
    if target is None:
        target = cycle_target(lists.k)
    masks = list(lists.masks) if lists is not None else [target.full] * g.n
    for sol in _search(g, masks, target):
        f = [min_color(m) for m in sol]
        assert verify(g, lists, target, f)
        return f
    return None


def enumerate_all(g: Graph, lists: ListAssignment | None, target: Target | None = None,
                  cap: int | None = 10**7) -> list[list[int]]:
    """Every list-respecting homomorphism, in search order.

    Raises CapExceeded once more than `cap` colourings have been produced.
    """
    if target is None:
        target = cycle_target(lists.k)
    masks = list(lists.masks) if lists is not None else [target.full] * g.n
    out = []
    for sol in _search(g, masks, target):
        out.append([min_color(m) for m in sol])
        if cap is not None and len(out) > cap:
            raise CapExceeded(f"more than {cap} colourings")
    return out


def count_all(g: Graph, lists: ListAssignment | None, target: Target | None = None) -> int:
    if target is None:
        target = cycle_target(lists.k)
    masks = list(lists.masks) if lists is not None else [target.full] * g.n
    return sum(1 for _ in _search(g, masks, target))


def solve_extension(g: Graph, target: Target, precoloring: Mapping[int, int]) -> list[int] | None:
    """Extend a partial map to a full homomorphism (singleton lists on the
    precoloured vertices, full lists elsewhere)."""
    lists = ListAssignment.precolored(g.n, target.size, precoloring)
    return solve_exact(g, lists, target)
