"""Hardness constructions and the forbidden-subgraph classifier.

Every generator numbers vertices deterministically: source objects first
(variables, hypergraph vertices), then gadget vertices in construction order.
Structural certificates are recomputed from the emitted graph and stored in
the metadata; a failing certificate raises AssertionError.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Mapping, Sequence

from .errors import GraphError
from .graph import (Graph, branch_vertices, build_graph, girth, is_bipartite, is_connected,
                    is_in_gamma_p, is_triangle_free, max_degree, bfs_distances)
from .lists import ListAssignment


# --- source objects ----------------------------------------------------------

KINDS = ("3sat", "nae3sat", "monotone3sat")


@dataclass(frozen=True)
class Formula:
    """CNF over variables 1..nvars; literal -i is the negation of x_i."""

    nvars: int
    clauses: tuple[tuple[int, ...], ...]
    kind: str = "3sat"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown formula kind {self.kind!r}")
        if self.nvars < 0:
            raise ValueError("negative variable count")
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause")
            for lit in cl:
                if lit == 0 or abs(lit) > self.nvars:
                    raise ValueError(f"literal {lit} outside 1..{self.nvars}")
        if self.kind == "nae3sat":
            for cl in self.clauses:
                if len(cl) != 3 or len(set(cl)) != 3 or min(cl) < 0:
                    raise ValueError(f"NAE clause {cl} needs 3 distinct positive literals")
        elif self.kind == "monotone3sat":
            for cl in self.clauses:
                if len({abs(x) for x in cl}) != len(cl) or len(cl) not in (2, 3):
                    raise ValueError(f"monotone clause {cl} needs 2 or 3 distinct variables")
                if min(cl) < 0 < max(cl):
                    raise ValueError(f"clause {cl} mixes positive and negative literals")

    def occurrences(self, var: int) -> int:
        return sum(1 for cl in self.clauses for lit in cl if abs(lit) == var)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """assignment[i-1] is the value of x_i. NAE formulas need a true and a
        false literal in every clause."""
        def val(lit: int) -> bool:
            return assignment[abs(lit) - 1] == (lit > 0)
        if self.kind == "nae3sat":
            return all(len({val(l) for l in cl}) == 2 for cl in self.clauses)
        return all(any(val(l) for l in cl) for cl in self.clauses)

    def brute_force(self) -> bool:
        return any(self.satisfied_by(a) for a in product((False, True), repeat=self.nvars))


@dataclass(frozen=True)
class Hypergraph:
    """3-uniform hypergraph on 0..n-1 with a partial colouring by 1..3."""

    n: int
    edges: tuple[tuple[int, int, int], ...]
    fixed: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for e in self.edges:
            if len(e) != 3 or len(set(e)) != 3:
                raise ValueError(f"hyperedge {e} must have 3 distinct vertices")
            if not all(0 <= v < self.n for v in e):
                raise ValueError(f"hyperedge {e} has a vertex outside 0..{self.n - 1}")
        for v, c in self.fixed.items():
            if not 0 <= v < self.n or c not in (1, 2, 3):
                raise ValueError(f"bad precolouring {v} -> {c}")

    def brute_force(self) -> bool:
        """Does the partial colouring extend with no rainbow hyperedge?"""
        free = [v for v in range(self.n) if v not in self.fixed]
        for choice in product((1, 2, 3), repeat=len(free)):
            col = dict(self.fixed)
            col.update(zip(free, choice))
            if all(len({col[v] for v in e}) < 3 for e in self.edges):
                return True
        return False


@dataclass
class GadgetInstance:
    graph: Graph
    k: int
    lists: ListAssignment | None = None
    precoloring: dict[int, int] | None = None
    outputs: tuple[int, ...] = ()
    meta: dict[str, object] = field(default_factory=dict)

    def list_assignment(self) -> ListAssignment:
        """Lists for the solver: explicit lists, else singletons on the
        precoloured vertices, else full lists."""
        if self.lists is not None:
            return self.lists
        return ListAssignment.precolored(self.graph.n, self.k, self.precoloring or {})


class _Builder:
    def __init__(self, n: int = 0):
        self.n = n
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def path(self, u: int, v: int, m: int) -> list[int]:
        """Join u to v by a path with m edges; returns all its vertices."""
        verts = [u] + [self.vertex() for _ in range(m - 1)] + [v]
        for a, b in zip(verts, verts[1:]):
            self.edge(a, b)
        return verts

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise AssertionError(f"certificate failed: {what}")


def _odd_k(k: int) -> int:
    if k < 5 or k % 2 == 0:
        raise ValueError(f"k must be odd and at least 5, got {k}")
    return (k - 1) // 2


# --- subdivision and degree reduction ---------------------------------------

def subdivide(g: Graph, m: int) -> Graph:
    """Replace every edge by a path with m edges; new vertices are appended
    edge by edge in sorted edge order."""
    if m < 1:
        raise ValueError("m must be at least 1")
    b = _Builder(g.n)
    for u, v in g.edges:
        b.path(u, v, m)
    return b.graph()


def subdivide_instance(g: Graph, s: int) -> GadgetInstance:
    """g is (2s+1)-colourable iff the (2s-1)-subdivision is C_{2s+1}-colourable."""
    h = subdivide(g, 2 * s - 1)
    gi = girth(g)
    if gi is not None:
        _require(girth(h) == gi * (2 * s - 1), "girth multiplies by 2s-1")
    _require(is_in_gamma_p(h, 2 * s - 1), "branch paths divisible by 2s-1")
    return GadgetInstance(h, 2 * s + 1, meta={
        "gadget": "subdivide", "s": s, "m": 2 * s - 1, "k": 2 * s + 1,
        "source_vertices": g.n, "source_edges": g.m,
        "claim": f"source is {2 * s + 1}-colourable iff output is C_{2 * s + 1}-colourable",
        "girth": girth(h), "gamma": 2 * s - 1,
    })


def _chain_into(b: _Builder, d: int, k: int, first: int | None = None) -> list[int]:
    """Add a chain of d copies of C_k to b; returns the outputs. If `first`
    is given it is used as the first output vertex."""
    prev: list[int] | None = None
    outputs = []
    for j in range(d):
        w: list[int | None] = [None] * k
        if prev is not None:
            w[k - 1], w[k - 2] = prev[1], prev[2]
        for i in range(k):
            if w[i] is None:
                w[i] = first if (i == 0 and j == 0 and first is not None) else b.vertex()
        for i in range(k):
            a, c = w[i], w[(i + 1) % k]
            if prev is None or not {i, (i + 1) % k} <= {k - 1, k - 2}:
                b.edge(a, c)
        outputs.append(w[0])
        prev = w  # type: ignore[assignment]
    return outputs


def build_chain_gadget(d: int, k: int) -> GadgetInstance:
    """R^d: d copies of C_k where copy j+1 shares the edge w_1 w_2 of copy j
    (as its w_{k-1} w_{k-2}). Outputs are the w_0 vertices."""
    _odd_k(k)
    if d < 1:
        raise ValueError("d must be at least 1")
    b = _Builder()
    outputs = _chain_into(b, d, k)
    g = b.graph()
    _require(g.n == k * d - 2 * (d - 1), "vertex count")
    _require(max_degree(g) <= 3, "subcubic")
    _require(is_triangle_free(g), "triangle-free")
    return GadgetInstance(g, k, outputs=tuple(outputs), meta={
        "gadget": "chain", "d": d, "k": k, "outputs": " ".join(map(str, outputs)),
        "claim": "all outputs share one colour in every C_k-colouring; every colour occurs",
        "max_degree": max_degree(g),
    })


def reduce_degree(g: Graph, k: int) -> Graph:
    """Replace each vertex of degree d >= 4 (in increasing order) by R^d. The
    vertex keeps its id as the first output; its neighbours, in increasing
    order, are wired to the outputs in turn."""
    _odd_k(k)
    adj = [set(a) for a in g.adj]
    b = _Builder(g.n)
    for v in range(g.n):
        d = len(adj[v])
        if d < 4:
            continue
        nbrs = sorted(adj[v])
        adj[v] = set()
        for u in nbrs:
            adj[u].discard(v)
        start = len(b.edges)
        outputs = _chain_into(b, d, k, first=v)
        while len(adj) < b.n:
            adj.append(set())
        for x, y in b.edges[start:]:
            adj[x].add(y)
            adj[y].add(x)
        for o, u in zip(outputs, nbrs):
            adj[o].add(u)
            adj[u].add(o)
        b.edges = b.edges[:start]
    edges = sorted({(min(u, w), max(u, w)) for u in range(len(adj)) for w in adj[u]})
    h = build_graph(len(adj), edges)
    _require(max_degree(h) <= 3, "subcubic")
    return h


def reduce_degree_instance(g: Graph, k: int) -> GadgetInstance:
    h = reduce_degree(g, k)
    return GadgetInstance(h, k, meta={
        "gadget": "degree-reduce", "k": k, "source_vertices": g.n, "source_edges": g.m,
        "claim": f"source is C_{k}-colourable iff output is", "max_degree": max_degree(h),
    })


# --- non-rainbow colouring extension ----------------------------------------

def nonrainbow_to_extension(h: Hypergraph, s: int) -> GadgetInstance:
    """Extension instance for C_{2s+1}: vertex v of h becomes vertex v; free
    vertices get 2s-2 precoloured anchors (colours 4..2s+1) on (2s-1)-edge
    paths; each hyperedge gets a centre joined to its three vertices by
    s-edge paths."""
    if s < 2:
        raise ValueError("s must be at least 2")
    k = 2 * s + 1
    b = _Builder(h.n)
    pre = dict(h.fixed)
    for v in range(h.n):
        if v in h.fixed:
            continue
        for c in range(4, k + 1):
            a = b.vertex()
            pre[a] = c
            b.path(a, v, 2 * s - 1)
    centres = []
    for e in h.edges:
        ve = b.vertex()
        centres.append(ve)
        for x in e:
            b.path(ve, x, s)
    g = b.graph()
    _require(is_bipartite(g), "bipartite")
    _require(is_in_gamma_p(g, s), f"in Gamma_{s}")
    return GadgetInstance(g, k, precoloring=pre, meta={
        "gadget": "nonrainbow", "s": s, "k": k, "source_vertices": h.n,
        "source_edges": " ".join("-".join(map(str, e)) for e in h.edges),
        "source_fixed": " ".join(f"{v}={c}" for v, c in sorted(h.fixed.items())),
        "claim": "precolouring extends iff the partial colouring extends with no rainbow hyperedge",
        "bipartite": "yes", "gamma": s,
    })


# --- positive NAE-3-SAT -----------------------------------------------------

def nae3sat_to_coloring(f: Formula, s: int, d: int | None = None) -> GadgetInstance:
    """C_{2s+1}-colouring instance: z = 0, v_i = i, then per clause the three
    y vertices, the clause gadget paths and the connector paths P_{l,i}."""
    if f.kind != "nae3sat":
        raise ValueError("formula must be of kind nae3sat")
    if s < 2:
        raise ValueError("s must be at least 2")
    unit = s * (2 * s - 1)
    d = unit if d is None else d
    if d < 1 or d % unit:
        raise ValueError(f"d must be a positive multiple of {unit}")
    k = 2 * s + 1
    b = _Builder(1 + f.nvars)
    z = 0
    for i in range(1, f.nvars + 1):
        b.edge(z, i)
    plen = 2 * d * (2 * s - 1) + 1
    for cl in f.clauses:
        ys = [b.vertex() for _ in cl]
        for a, c in ((0, 1), (0, 2), (1, 2)):
            b.path(ys[a], ys[c], 2 * s - 1)
        for var, y in zip(cl, ys):
            p = b.path(var, y, plen)  # p[t-1] is p_t
            for j in range(1, 2 * d + 1):
                b.edge(z, p[j * (2 * s - 1)])
    g = b.graph()
    expect = 1 + f.nvars + len(f.clauses) * (3 * (2 * s - 1) + 3 * 2 * d * (2 * s - 1))
    _require(g.n == expect, "vertex count")
    return GadgetInstance(g, k, meta={
        "gadget": "nae", "s": s, "d": d, "k": k, "source_nvars": f.nvars,
        "source_clauses": " ".join("(" + ",".join(map(str, cl)) + ")" for cl in f.clauses),
        "claim": f"C_{k}-colourable iff the formula is NAE-satisfiable",
        "vertices": g.n,
    })


# --- monotone 3-SAT to list C_{2s} --------------------------------------------

def _prefix(s: int, g: int) -> list[set[int]]:
    return [{1, 3} if t % 2 == 0 else {2 * s, 4} for t in range(g)]


def q_path_lists(i: int, s: int, g: int = 4) -> list[set[int]]:
    """Lists along Q^(i) from a^i to b^i for i in {1, 3, 5}, target C_{2s}.

    In Q^(3) the entry after {4,2} is {5,1}: with {3,1} there the path admits
    a=3, b=3, which would let a false variable satisfy the clause.
    """
    if s < 3:
        raise ValueError("s must be at least 3")
    if g < 4 or g % 2:
        raise ValueError("g must be even and at least 4")
    out = _prefix(s, g)
    if i == 1:
        out += [{1, 3}, {2 * s, 2}, {2 * s - 1, 3}, {2 * s, 4}, {1, 3, 5}]
    elif i == 5:
        out += [{1, 3}] + [{m, 2 if m % 2 == 0 else 3} for m in range(2 * s, 5, -1)] + [{1, 3, 5}]
    elif i == 3:
        out += [{1, 3}, {2 * s, 2}]
        out += [{m, 1 if m % 2 else 2} for m in range(2 * s - 1, 3, -1)]
        out += [{5, 1}, {4, 2 * s}]
        for m in range(2 * s - 1, 6, -2):
            out += [{1, 3, m}, {4, m - 1, 2 * s}]
        out += [{1, 3, 5}]
    else:
        raise ValueError("i must be 1, 3 or 5")
    return out


def reflect(c: int, s: int) -> int:
    """Automorphism of C_{2s} swapping 1 and 3."""
    return (4 - c - 1) % (2 * s) + 1


def q_bar_path_lists(i: int, s: int, g: int = 4) -> list[set[int]]:
    """Q-bar^(i): Q^(i) under the reflection swapping 1 and 3. Its far end
    uses {1, 3, 2s-1} where Q^(i) uses {1, 3, 5}."""
    return [{reflect(c, s) for c in lst} for lst in q_path_lists(i, s, g)]


def monotone3sat_to_listinstance(f: Formula, s: int = 3, g: int = 4,
                                 max_occurrences: int | None = 3) -> GadgetInstance:
    """List C_{2s}-colouring instance. x_i is vertex i-1, clause l is vertex
    nvars+l, then path interiors clause by clause."""
    if f.kind != "monotone3sat":
        raise ValueError("formula must be of kind monotone3sat")
    if max_occurrences is not None:
        for v in range(1, f.nvars + 1):
            if f.occurrences(v) > max_occurrences:
                raise ValueError(f"x{v} occurs more than {max_occurrences} times")
    k = 2 * s
    n0 = f.nvars + len(f.clauses)
    b = _Builder(n0)
    lists: list[set[int]] = [{1, 3} for _ in range(f.nvars)]
    for cl in f.clauses:
        neg = cl[0] < 0
        third = (2 * s - 1) if neg else 5
        lists.append({1, 3, third} if len(cl) == 3 else {1, 3})
    for l, cl in enumerate(f.clauses):
        dv = f.nvars + l
        for lit, i in zip(cl, (1, 3, 5)):
            seq = q_bar_path_lists(i, s, g) if lit < 0 else q_path_lists(i, s, g)
            b.path(abs(lit) - 1, dv, len(seq) - 1)
            lists.extend(seq[1:-1])
    graph = b.graph()
    la = ListAssignment.from_sets(k, lists)
    branch = branch_vertices(graph)
    gi = girth(graph)
    _require(gi is None or gi > g, f"girth > {g}")
    if max_occurrences is not None and max_occurrences <= 3:
        _require(max_degree(graph) <= 3, "subcubic")
    close = None
    for u in branch:
        dist = bfs_distances(graph, [u])
        for w in branch:
            if w > u and dist[w] is not None and (close is None or dist[w] < close):
                close = dist[w]
    _require(close is None or close > g, f"branch vertices at distance > {g}")
    return GadgetInstance(graph, k, lists=la, meta={
        "gadget": "monotone-list", "s": s, "g": g, "k": k, "source_nvars": f.nvars,
        "source_clauses": " ".join("(" + ",".join(map(str, cl)) + ")" for cl in f.clauses),
        "claim": f"list C_{k}-colourable iff the formula is satisfiable",
        "girth": gi if gi is not None else "inf", "max_degree": max_degree(graph),
        "branch_distance": close if close is not None else "inf",
    })


# --- classification ----------------------------------------------------------

class Verdict(str, Enum):
    POLYNOMIAL = "PolynomialKnown"
    NP_COMPLETE = "NPCompleteKnown"
    OPEN = "OpenOrUnknown"

    def __str__(self) -> str:
        return self.value


VARIANTS = ("plain", "extension", "list")


def is_tree(f: Graph) -> bool:
    return is_connected(f) and f.m == f.n - 1


def is_path_graph(f: Graph) -> bool:
    return is_tree(f) and max_degree(f) <= 2


def is_claw_subgraph(f: Graph) -> bool:
    """Subgraph of a subdivided claw: a path, or a tree with one branch vertex
    and that vertex of degree 3."""
    return is_tree(f) and max_degree(f) <= 3 and len(branch_vertices(f)) <= 1


def classify(f: Graph, k: int, variant: str) -> Verdict:
    """Known complexity of the variant of C_k-colouring on F-free graphs."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if f.n == 0 or not is_connected(f):
        raise GraphError("F must be connected and nonempty")
    if k < 3:
        raise ValueError("k must be at least 3")
    if is_path_graph(f) and f.n <= 9 and (k in (5, 7) or k >= 9):
        return Verdict.POLYNOMIAL
    if k % 2 == 0 and (variant == "plain" or k == 4):
        return Verdict.POLYNOMIAL
    if not is_claw_subgraph(f):
        if k % 2 == 1 and k >= 5:
            return Verdict.NP_COMPLETE
        if k % 2 == 0 and k >= 6 and variant == "list":
            return Verdict.NP_COMPLETE
    return Verdict.OPEN
