"""Simple undirected graphs on vertices 0..n-1 and the structural searches used
by the solvers and gadget checks.

Neighbourhoods are kept both as frozensets and as int bitmasks; the searches
below work on the bitmasks.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError, NoSeed


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[frozenset, ...] = field(compare=False, repr=False)
    masks: tuple[int, ...] = field(compare=False, repr=False)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, dropping duplicate edges. Self-loops and out-of-range
    endpoints raise GraphError."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen = set()
    for e in edge_list:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    nb: list[set] = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    masks = tuple(sum(1 << w for w in s) for s in nb)
    return Graph(n, edges, tuple(frozenset(s) for s in nb), masks)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# --- named graphs -----------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return build_graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# --- helpers ----------------------------------------------------------------

def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    q = deque()
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            q.append(s)
    while q:
        u = q.popleft()
        for w in sorted(g.adj[u]):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    original: tuple[int, ...]  # new vertex i is original[i] in the parent

    def lift(self, values: Sequence) -> dict[int, object]:
        return {self.original[i]: x for i, x in enumerate(values)}


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    verts = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return InducedSubgraph(build_graph(len(verts), edges), verts)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> list[int] | None:
    """Side (0/1) of each vertex, smallest vertex of each component on side 0."""
    side: list[int | None] = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if side[w] is None:
                    side[w] = 1 - side[u]
                    q.append(w)
                elif side[w] == side[u]:
                    return None
    return side  # type: ignore[return-value]


# --- predicates -------------------------------------------------------------

def is_triangle_free(g: Graph) -> bool:
    masks = g.masks
    return all(not (masks[u] & masks[v]) for u, v in g.edges)


def find_induced_path(g: Graph, t: int) -> list[int] | None:
    """Vertices of an induced path on t vertices, or None.

    Exhaustive DFS; a vertex may join the path only if it is adjacent to the
    current end and to no earlier path vertex.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if t > g.n:
        return None
    masks = g.masks

    def extend(path: list[int], blocked: int) -> list[int] | None:
        if len(path) == t:
            return path
        last = path[-1]
        # blocked covers every path vertex and the neighbourhoods of all but the end
        cand = masks[last] & ~blocked
        new_blocked = blocked | masks[last]
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            found = extend(path + [u], new_blocked | low)
            if found:
                return found
        return None

    for s in range(g.n):
        found = extend([s], 1 << s)
        if found:
            return found
    return None


def is_pt_free(g: Graph, t: int) -> bool:
    return find_induced_path(g, t) is None


def ball_mask(g: Graph, sources: int, radius: int) -> int:
    reach = sources
    frontier = sources
    for _ in range(radius):
        nxt = 0
        for v in bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~reach
        reach |= nxt
        if not frontier:
            break
    return reach


def connected_subsets(g: Graph, max_size: int):
    """Yield connected vertex subsets as bitmasks, by size, each size in
    increasing order of the sorted vertex tuple."""
    level = {1 << v for v in range(g.n)}
    for _size in range(1, max_size + 1):
        if not level:
            return
        for m in sorted(level, key=lambda x: bits(x)):
            yield m
        nxt = set()
        for m in level:
            border = 0
            for v in bits(m):
                border |= g.masks[v]
            border &= ~m
            for u in bits(border):
                nxt.add(m | (1 << u))
        level = nxt


def find_seed(g: Graph, max_size: int = 7) -> list[int]:
    """Smallest connected S (|S| <= 7) with every vertex within distance 3 of S.

    Candidates are tried by size, then lexicographically.
    """
    if g.n == 0:
        return []
    full = (1 << g.n) - 1
    for m in connected_subsets(g, max_size):
        if ball_mask(g, m, 3) == full:
            return bits(m)
    raise NoSeed(f"no connected seed of size <= {max_size}")


def girth(g: Graph) -> int | None:
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def branch_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if len(g.adj[v]) >= 3]


def branch_threads(g: Graph) -> list[tuple[int, int, int]]:
    """Maximal paths whose ends are branch vertices and whose interior vertices
    all have degree 2, as (start, end, edge count). Threads returning to their
    own start are skipped."""
    out = []
    for b in branch_vertices(g):
        for first in sorted(g.adj[b]):
            prev, cur, length = b, first, 1
            while len(g.adj[cur]) == 2 and cur != b:
                nxt = next(w for w in g.adj[cur] if w != prev)
                prev, cur = cur, nxt
                length += 1
            if len(g.adj[cur]) >= 3 and cur != b and b < cur:
                out.append((b, cur, length))
    return out


def is_in_gamma_p(g: Graph, p: int) -> bool:
    """True iff every path joining two branch vertices has an edge count
    divisible by p.

    A path between branch vertices splits at its interior branch vertices into
    threads, so checking threads is enough.
    """
    if p < 1:
        raise ValueError("p must be positive")
    return all(length % p == 0 for _, _, length in branch_threads(g))


def branch_path_lengths(g: Graph) -> set[int]:
    """Edge counts of all simple paths between pairs of branch vertices
    (exhaustive; small graphs only)."""
    branch = set(branch_vertices(g))
    lengths: set[int] = set()

    def walk(v: int, visited: int, length: int, start: int) -> None:
        if length and v in branch and v != start:
            lengths.add(length)
        for w in g.adj[v]:
            if not visited >> w & 1:
                walk(w, visited | 1 << w, length + 1, start)

    for b in branch:
        walk(b, 1 << b, 0, b)
    return lengths

