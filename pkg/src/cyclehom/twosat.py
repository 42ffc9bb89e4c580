"""2-SAT via strongly connected components of the implication graph, and the
encoding of list homomorphism instances whose lists have at most two colours.

Literals are DIMACS style: variable x (0-based) is +(x+1), its negation -(x+1).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ListTooLarge
from .graph import Graph
from .lists import ListAssignment, Target, colors_of, popcount


@dataclass
class TwoSatFormula:
    nvars: int = 0
    clauses: list[tuple[int, ...]] = field(default_factory=list)
    decode_map: list[tuple[int, int]] = field(default_factory=list)  # var -> (vertex, colour)
    index: dict[tuple[int, int], int] = field(default_factory=dict)

    def var(self, vertex: int, color: int) -> int:
        """Variable for (vertex, colour), created on first use."""
        key = (vertex, color)
        x = self.index.get(key)
        if x is None:
            x = self.nvars
            self.nvars += 1
            self.index[key] = x
            self.decode_map.append(key)
        return x

    def lit(self, vertex: int, color: int, positive: bool = True) -> int:
        x = self.var(vertex, color) + 1
        return x if positive else -x

    def add(self, *lits: int) -> None:
        if not 1 <= len(lits) <= 2:
            raise ValueError("2-SAT clauses have one or two literals")
        self.clauses.append(tuple(lits))

    def to_dimacs(self) -> str:
        lines = [f"c var {x + 1} vertex {v} color {c}" for x, (v, c) in enumerate(self.decode_map)]
        lines.append(f"p cnf {self.nvars} {len(self.clauses)}")
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"


def _node(lit: int) -> int:
    # literal -> implication graph node: 2x for x, 2x+1 for not x
    return 2 * (abs(lit) - 1) + (lit < 0)


def solve_2sat(f: TwoSatFormula) -> list[bool] | None:
    """Satisfying assignment (list indexed by variable) or None."""
    n = 2 * f.nvars
    succ: list[list[int]] = [[] for _ in range(n)]
    for cl in f.clauses:
        a = cl[0]
        b = cl[1] if len(cl) == 2 else cl[0]
        # a or b  ==  (not a -> b) and (not b -> a)
        succ[_node(a) ^ 1].append(_node(b))
        succ[_node(b) ^ 1].append(_node(a))

    # iterative Tarjan; components are numbered in reverse topological order
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1

    assignment = []
    for x in range(f.nvars):
        if comp[2 * x] == comp[2 * x + 1]:
            return None
        # x is true when its component comes later in topological order
        assignment.append(comp[2 * x] < comp[2 * x + 1])
    return assignment


def encode_list_hom(g: Graph, lists: ListAssignment, target: Target,
                    vertices: list[int] | None = None) -> TwoSatFormula:
    """Encode the instance restricted to `vertices` (default: all).

    Variables are numbered vertex-major, colour-minor. Clauses: one colour per
    vertex, and for every edge a conflict clause per non-adjacent colour pair.
    """
    verts = range(g.n) if vertices is None else sorted(vertices)
    inside = set(verts)
    f = TwoSatFormula()
    for v in verts:
        m = lists.masks[v]
        if popcount(m) > 2:
            raise ListTooLarge(f"vertex {v} has list {colors_of(m)}")
        if m == 0:
            raise ValueError(f"vertex {v} has an empty list")
        for c in colors_of(m):
            f.var(v, c)
    for v in verts:
        cs = colors_of(lists.masks[v])
        if len(cs) == 1:
            f.add(f.lit(v, cs[0]))
        else:
            x, y = cs
            f.add(f.lit(v, x), f.lit(v, y))
            f.add(f.lit(v, x, False), f.lit(v, y, False))
    for u, v in g.edges:
        if u not in inside or v not in inside:
            continue
        for x in colors_of(lists.masks[u]):
            for y in colors_of(lists.masks[v]):
                if not target.adjacent(x, y):
                    f.add(f.lit(u, x, False), f.lit(v, y, False))
    return f


def decode(f: TwoSatFormula, assignment: list[bool]) -> dict[int, int]:
    coloring: dict[int, int] = {}
    for x, value in enumerate(assignment):
        if value:
            v, c = f.decode_map[x]
            if v in coloring:
                raise ValueError(f"vertex {v} decoded to two colours")
            coloring[v] = c
    return coloring


def solve_list_hom_2sat(g: Graph, lists: ListAssignment, target: Target) -> list[int] | None:
    """Colouring of an instance with lists of size at most 2, or None."""
    if any(m == 0 for m in lists.masks):
        return None
    f = encode_list_hom(g, lists, target)
    a = solve_2sat(f)
    if a is None:
        return None
    col = decode(f, a)
    return [col[v] for v in range(g.n)]
