"""List assignments over cycle colours 1..k, the shape-aware update rule and
its fixpoint, and generic arc consistency against a fixed target graph.

A list is an int bitmask: colour c is bit c-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Graph


def cyc(c: int, k: int) -> int:
    """Colour arithmetic mod k with 0 identified with k."""
    return (c - 1) % k + 1


def bit(c: int, k: int) -> int:
    return 1 << (cyc(c, k) - 1)


def mask_of_colors(colors: Iterable[int], k: int) -> int:
    m = 0
    for c in colors:
        m |= bit(c, k)
    return m


def colors_of(mask: int) -> list[int]:
    out = []
    c = 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def min_color(mask: int) -> int:
    return (mask & -mask).bit_length()


def pair_mask(i: int, k: int) -> int:
    """{i-1, i+1}"""
    return bit(i - 1, k) | bit(i + 1, k)


def triple_mask(i: int, k: int) -> int:
    """{i, i-2, i+2}"""
    return bit(i, k) | bit(i - 2, k) | bit(i + 2, k)


def pair_center(mask: int, k: int) -> int | None:
    if popcount(mask) != 2:
        return None
    for i in range(1, k + 1):
        if pair_mask(i, k) == mask:
            return i
    return None


def triple_center(mask: int, k: int) -> int | None:
    if popcount(mask) != 3:
        return None
    for i in range(1, k + 1):
        if triple_mask(i, k) == mask:
            return i
    return None


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex colour lists over C_k."""

    k: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1 or self.k > 64:
            raise ValueError("k must be in 1..64")
        full = (1 << self.k) - 1
        for m in self.masks:
            if m & ~full:
                raise ValueError(f"list {colors_of(m)} has colours outside 1..{self.k}")

    @classmethod
    def full(cls, n: int, k: int) -> ListAssignment:
        return cls(k, ((1 << k) - 1,) * n)

    @classmethod
    def from_sets(cls, k: int, sets: Sequence[Iterable[int]]) -> ListAssignment:
        return cls(k, tuple(mask_of_colors(s, k) for s in sets))

    @classmethod
    def precolored(cls, n: int, k: int, fixed: Mapping[int, int]) -> ListAssignment:
        """Singleton lists on precoloured vertices, full lists elsewhere."""
        full = (1 << k) - 1
        return cls(k, tuple(bit(fixed[v], k) if v in fixed else full for v in range(n)))

    def __len__(self) -> int:
        return len(self.masks)

    def colors(self, v: int) -> list[int]:
        return colors_of(self.masks[v])

    def as_sets(self) -> list[set[int]]:
        return [set(colors_of(m)) for m in self.masks]

    def size(self, v: int) -> int:
        return popcount(self.masks[v])

    def with_mask(self, v: int, mask: int) -> ListAssignment:
        masks = list(self.masks)
        masks[v] = mask
        return ListAssignment(self.k, tuple(masks))

    def restrict(self, vertices: Sequence[int]) -> ListAssignment:
        return ListAssignment(self.k, tuple(self.masks[v] for v in vertices))

    def is_subinstance_of(self, other: ListAssignment) -> bool:
        return all(a & ~b == 0 for a, b in zip(self.masks, other.masks))


# --- goodness and the update rule ------------------------------------------

def is_good_list(mask: int, k: int) -> bool:
    size = popcount(mask)
    if size in (1, k):
        return True
    if size == 2:
        return pair_center(mask, k) is not None
    if size == 3:
        return triple_center(mask, k) is not None
    return False


def is_good(lists: ListAssignment) -> bool:
    return all(is_good_list(m, lists.k) for m in lists.masks)


def update_mask(lv: int, lw: int, k: int) -> int:
    """New list of v after updating v from its neighbour w.

    Singleton {i} at w leaves {i-1,i+1}; a pair {i-1,i+1} leaves
    {i,i-2,i+2}; a triple {i,i-2,i+2} meeting a triple at v leaves
    {i-1,i+1,i-3,i+3}. Any other shape of L(w) changes nothing.
    """
    if popcount(lw) == 1:
        i = min_color(lw)
        return lv & pair_mask(i, k)
    i = pair_center(lw, k)
    if i is not None:
        return lv & triple_mask(i, k)
    i = triple_center(lw, k)
    if i is not None and triple_center(lv, k) is not None:
        return lv & (pair_mask(i, k) | bit(i - 3, k) | bit(i + 3, k))
    return lv


def update(lists: ListAssignment, v: int, w: int, g: Graph) -> tuple[ListAssignment, bool]:
    """Update v from w; returns the new assignment and whether L(v) shrank."""
    if not g.has_edge(v, w):
        raise ValueError(f"{v}{w} is not an edge")
    old = lists.masks[v]
    new = update_mask(old, lists.masks[w], lists.k)
    if new == old:
        return lists, False
    return lists.with_mask(v, new), True


def reduce_masks(g: Graph, masks: list[int], k: int, within: int | None = None) -> bool:
    """In-place exhaustive effective updates. Returns False once a list empties.

    `within` optionally restricts to edges with both ends in that vertex mask.
    Edges are scanned in lexicographic order, each in both directions.
    """
    arcs = []
    for u, v in g.edges:
        if within is not None and not (within >> u & 1 and within >> v & 1):
            continue
        arcs.append((u, v))
        arcs.append((v, u))
    changed = True
    while changed:
        changed = False
        for v, w in arcs:
            old = masks[v]
            new = update_mask(old, masks[w], k)
            if new != old:
                masks[v] = new
                if not new:
                    return False
                changed = True
    return True


def reduce(g: Graph, lists: ListAssignment) -> ListAssignment | None:
    """Equivalent reduced subinstance, or None when some list empties."""
    if any(m == 0 for m in lists.masks):
        return None
    masks = list(lists.masks)
    if not reduce_masks(g, masks, lists.k):
        return None
    return ListAssignment(lists.k, tuple(masks))


def is_reduced(g: Graph, lists: ListAssignment) -> bool:
    k = lists.k
    for u, v in g.edges:
        if update_mask(lists.masks[u], lists.masks[v], k) != lists.masks[u]:
            return False
        if update_mask(lists.masks[v], lists.masks[u], k) != lists.masks[v]:
            return False
    return True


# --- targets and arc consistency --------------------------------------------

@dataclass(frozen=True)
class Target:
    """A fixed target graph on colours 1..size; adj[c] is the neighbour mask of c."""

    size: int
    adj: tuple[int, ...]  # index 0 unused
    name: str = ""

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> (b - 1) & 1)

    def support(self, mask: int) -> int:
        """Colours adjacent to at least one colour of mask."""
        out = 0
        c = 1
        while mask:
            if mask & 1:
                out |= self.adj[c]
            mask >>= 1
            c += 1
        return out

    @property
    def full(self) -> int:
        return (1 << self.size) - 1


def cycle_target(k: int) -> Target:
    adj = [0] + [bit(c - 1, k) | bit(c + 1, k) for c in range(1, k + 1)]
    return Target(k, tuple(adj), f"C{k}")


def path_target(t: int) -> Target:
    """Path 1-2-...-t."""
    adj = [0]
    for c in range(1, t + 1):
        m = 0
        if c > 1:
            m |= 1 << (c - 2)
        if c < t:
            m |= 1 << c
        adj.append(m)
    return Target(t, tuple(adj), f"P{t}")


def target_from_edges(size: int, edges: Iterable[tuple[int, int]], name: str = "") -> Target:
    adj = [0] * (size + 1)
    for a, b in edges:
        adj[a] |= 1 << (b - 1)
        adj[b] |= 1 << (a - 1)
    return Target(size, tuple(adj), name)


def ac_masks(g: Graph, masks: list[int], target: Target, queue: Iterable[int] | None = None) -> bool:
    """In-place arc consistency. Returns False if a list empties.

    `queue` seeds the vertices whose lists changed; by default all vertices.
    """
    adj = g.adj
    support = target.support
    pending = list(range(g.n)) if queue is None else list(queue)
    in_queue = [False] * g.n
    for v in pending:
        in_queue[v] = True
    head = 0
    while head < len(pending):
        w = pending[head]
        head += 1
        in_queue[w] = False
        sup = support(masks[w])
        for v in adj[w]:
            old = masks[v]
            new = old & sup
            if new != old:
                if not new:
                    return False
                masks[v] = new
                if not in_queue[v]:
                    in_queue[v] = True
                    pending.append(v)
    return True


def arc_consistency(g: Graph, lists: ListAssignment, target: Target) -> ListAssignment | None:
    """Largest arc-consistent sub-assignment, or None if a list empties."""
    if any(m == 0 for m in lists.masks):
        return None
    masks = list(lists.masks)
    if not ac_masks(g, masks, target):
        return None
    return ListAssignment(lists.k, tuple(masks))
