"""List C_k-colouring of P_9-free graphs.

For k in {5, 7, 9} the layered branching algorithm runs in five phases:

  I    a seed S (connected, |S| <= 7, radius-3 neighbourhood covers G) and the
       layers X = N(S), Y = N(X) minus S, Z = the rest;
  II   every list-respecting colouring of G|S, propagated to canonical lists;
  III  branching until no bad path is left;
  IV   Z lists cut to two colours;
  V    Y lists cut so that only a stable set of 3-lists remains, which the
       final 2-SAT eliminates.

For k >= 10 the localized solver from `winding` is used instead.

Vertex sets are int bitmasks throughout; X and Y parts are tuples indexed by
colour - 1.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .errors import NoSeed, NotP9Free, Unsupported
from .graph import (Graph, bits, connected_components, find_induced_path, find_seed,
                    induced_subgraph, is_triangle_free)
from .lists import (ListAssignment, ac_masks, bit, colors_of, cycle_target, min_color,
                    pair_mask, popcount, reduce_masks, triple_center, triple_mask, update_mask)
from .oracle import verify
from .twosat import encode_list_hom, solve_2sat

MAX_ROUNDS = 6
P9_ODD = (5, 7, 9)


# --- data --------------------------------------------------------------------

@dataclass(frozen=True)
class LayerStructure:
    k: int
    S: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: int

    @property
    def x_all(self) -> int:
        out = 0
        for m in self.X:
            out |= m
        return out

    @property
    def y_all(self) -> int:
        out = 0
        for m in self.Y:
            out |= m
        return out

    def part(self, v: int) -> str:
        if self.S >> v & 1:
            return "S"
        for i, m in enumerate(self.X):
            if m >> v & 1:
                return f"X{i + 1}"
        for i, m in enumerate(self.Y):
            if m >> v & 1:
                return f"Y{i + 1}"
        return "Z"


@dataclass(frozen=True)
class Subinstance:
    masks: tuple[int, ...]
    layers: LayerStructure
    round: int = 0
    provenance: tuple = ()


@dataclass(frozen=True)
class BadPath:
    a: int
    b: int
    c: int
    i: int


@dataclass
class SolveStats:
    """Counters filled in by solve_p9free. `steps` holds one
    (round, parent min depth, child min depth or None) triple per explored
    Phase-III child; `max_round` is the deepest round that was reached."""

    seed: list = field(default_factory=list)
    seed_colorings: int = 0
    nodes: int = 0
    pruned: int = 0
    entered_phase3: bool = False
    max_round: int = 0
    steps: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def tick(self, key: str, dt: float) -> None:
        self.timings[key] = self.timings.get(key, 0.0) + dt

    def merge(self, other: SolveStats) -> None:
        self.seed_colorings += other.seed_colorings
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.entered_phase3 |= other.entered_phase3
        self.max_round = max(self.max_round, other.max_round)
        self.steps += other.steps
        for key, dt in other.timings.items():
            self.tick(key, dt)


class _Infeasible(Exception):
    pass


def _nbhd(g: Graph, vertices: int) -> int:
    out = 0
    for v in bits(vertices):
        out |= g.masks[v]
    return out


# --- Phase I/II ----------------------------------------------------------------

def _first_index(g: Graph, k: int, candidates: int, sources) -> list[int]:
    """parts[i] = candidates adjacent to sources[i] and not taken earlier."""
    parts = []
    left = candidates
    for i in range(k):
        p = left & _nbhd(g, sources[i])
        parts.append(p)
        left &= ~p
    return parts


def _singleton_classes(masks, S: int, k: int) -> list[int]:
    out = [0] * k
    for s in bits(S):
        m = masks[s]
        if popcount(m) != 1:
            raise _Infeasible
        out[min_color(m) - 1] |= 1 << s
    return out


def _layers_from(g: Graph, k: int, S: int, Xparts) -> LayerStructure:
    full = (1 << g.n) - 1
    X = 0
    for m in Xparts:
        X |= m
    Yparts = _first_index(g, k, full & ~(S | X), Xparts)
    Y = 0
    for m in Yparts:
        Y |= m
    return LayerStructure(k, S, tuple(Xparts), tuple(Yparts), full & ~(S | X | Y))


def partition_layers(g: Graph, S: int, masks, k: int) -> LayerStructure:
    """Layers around a coloured seed (every seed vertex has a singleton list)."""
    X = _nbhd(g, S) & ~S
    Si = _singleton_classes(masks, S, k)
    return _layers_from(g, k, S, _first_index(g, k, X, Si))


def canonicalize(g: Graph, masks: list[int], layers: LayerStructure) -> bool:
    """Ordered updates S_i -> X_i then X_i -> Y_i for i = 1..k, in place.

    Returns False when a list empties or some X_i has an edge.
    """
    k = layers.k
    try:
        Si = _singleton_classes(masks, layers.S, k)
    except _Infeasible:
        return False
    for i in range(1, k + 1):
        Xi, Yi = layers.X[i - 1], layers.Y[i - 1]
        for x in bits(Xi):
            for s in bits(g.masks[x] & Si[i - 1]):
                masks[x] = update_mask(masks[x], masks[s], k)
            if not masks[x]:
                return False
        for y in bits(Yi):
            for x in bits(g.masks[y] & Xi):
                masks[y] = update_mask(masks[y], masks[x], k)
            if not masks[y]:
                return False
    for i in range(1, k + 1):
        Xi = layers.X[i - 1]
        if _nbhd(g, Xi) & Xi:
            return False
        for x in bits(Xi):
            if masks[x] & ~pair_mask(i, k):
                raise NotP9Free(f"vertex {x} of X_{i} is not canonical")
        for y in bits(layers.Y[i - 1]):
            if masks[y] & ~triple_mask(i, k):
                raise NotP9Free(f"vertex {y} of Y_{i} is not canonical")
    return True


def seed_colorings(g: Graph, seed: list[int], masks, k: int) -> list[dict[int, int]]:
    """List-respecting colourings of G|S that are homomorphisms to C_k, in
    lexicographic order (vertices ascending, colours ascending)."""
    return _local_colorings(g, sorted(seed), masks, cycle_target(k).adj)


def _local_colorings(g: Graph, verts: list[int], masks, adj) -> list[dict[int, int]]:
    out: list[dict[int, int]] = []
    col: dict[int, int] = {}

    def go(idx: int) -> None:
        if idx == len(verts):
            out.append(dict(col))
            return
        v = verts[idx]
        allowed = masks[v]
        for u in verts[:idx]:
            if g.has_edge(u, v):
                allowed &= adj[col[u]]
        for c in colors_of(allowed):
            col[v] = c
            go(idx + 1)
            del col[v]

    go(0)
    return out


# --- bad paths and depth -----------------------------------------------------

def find_bad_paths(g: Graph, sub: Subinstance) -> list[list[BadPath]]:
    """paths[i-1] = every bad path with starter in Y_i, in lexicographic order."""
    L = sub.layers
    yz = L.y_all | L.Z
    out = []
    for i in range(1, L.k + 1):
        Yi = L.Y[i - 1]
        allowed = yz & ~Yi & ~_nbhd(g, L.X[i - 1])
        found = []
        for a in bits(Yi):
            na = g.masks[a]
            for b in bits(na & allowed):
                for c in bits(g.masks[b] & allowed & ~na & ~(1 << a)):
                    found.append(BadPath(a, b, c, i))
        out.append(found)
    return out


def _longest_induced_into(g: Graph, start: int, inside: int, blocked: int) -> int:
    """Most vertices an induced path start-p1-...-pm with all p in `inside`
    can add (returns m). `blocked` holds vertices the path must avoid and
    their closed neighbourhoods are handled by the caller."""
    best = 0

    def extend(last: int, blocked: int, m: int) -> None:
        nonlocal best
        if m > best:
            best = m
        cand = g.masks[last] & inside & ~blocked
        nb = blocked | g.masks[last]
        for p in bits(cand):
            extend(p, nb | (1 << p), m + 1)

    extend(start, blocked, 0)
    return best


def starter_depth(g: Graph, sub: Subinstance, v: int) -> int:
    """Largest l such that every x in N(v) & X_i starts an induced path
    v-x-P on l vertices with P inside the seed (vertex count, so >= 2)."""
    L = sub.layers
    i = next(j for j in range(L.k) if L.Y[j] >> v & 1)
    depth = None
    for x in bits(g.masks[v] & L.X[i]):
        # the path may not touch v or v's neighbours other than x
        blocked = (1 << v) | (1 << x) | g.masks[v]
        m = _longest_induced_into(g, x, L.S, blocked)
        d = 2 + m
        depth = d if depth is None else min(depth, d)
    if depth is None:
        raise NotP9Free(f"starter {v} has no neighbour in its X part")
    return depth


def min_starter_depth(g: Graph, sub: Subinstance, paths) -> int | None:
    starters = sorted({p.a for ps in paths for p in ps})
    if not starters:
        return None
    return min(starter_depth(g, sub, a) for a in starters)


# --- Phase III ---------------------------------------------------------------

def _rebuild(g: Graph, sub: Subinstance, masks: list[int], A: int, round_: int,
             provenance: tuple) -> Subinstance | None:
    """Update everything from A, grow the seed to S u A and rebuild the layers."""
    k = sub.layers.k
    L = sub.layers
    for a in bits(A):
        if popcount(masks[a]) != 1:
            return None
        for v in bits(g.masks[a]):
            masks[v] = update_mask(masks[v], masks[a], k)
            if not masks[v]:
                return None
    S2 = L.S | A
    try:
        Si = _singleton_classes(masks, S2, k)
    except _Infeasible:
        return None
    K = [0] * k
    near = (L.y_all | L.Z) & _nbhd(g, S2) & ~S2
    for v in bits(near):
        for j in range(k):
            if g.masks[v] & Si[j]:
                K[j] |= 1 << v
                break
    Xparts = [(L.X[j] | K[j]) & ~A for j in range(k)]
    layers = _layers_from(g, k, S2, Xparts)
    if not canonicalize(g, masks, layers):
        return None
    return Subinstance(tuple(masks), layers, round_, provenance)


def branch_phase3(g: Graph, sub: Subinstance, paths=None):
    """Children of a subinstance with bad paths, lazily and in lexicographic
    branch order. Infeasible children are skipped."""
    L = sub.layers
    k = L.k
    if paths is None:
        paths = find_bad_paths(g, sub)
    nonempty = [i for i in range(1, k + 1) if paths[i - 1]]
    base_masks = sub.masks
    for sel in range(1 << len(nonempty)):
        I = [nonempty[j] for j in range(len(nonempty)) if sel >> j & 1]
        Istar = [i for i in nonempty if i not in I]
        m1 = list(base_masks)
        for i in Istar:
            for p in paths[i - 1]:
                m1[p.a] &= bit(i, k)
        star_choice = {}
        for i in Istar:
            Xi = L.X[i - 1]
            p = min(paths[i - 1], key=lambda q: (popcount(g.masks[q.a] & Xi), q.a, q.b, q.c))
            x = min(bits(g.masks[p.a] & Xi))
            star_choice[i] = (p, x)
        if any(m == 0 for m in m1):
            continue
        for chosen in product(*(paths[i - 1] for i in I)):
            m2 = list(m1)
            for p in chosen:
                m2[p.a] &= bit(p.i - 2, k) | bit(p.i + 2, k)
            if any(m2[p.a] == 0 for p in chosen):
                continue
            for qs in product(*(colors_of(m2[p.a]) for p in chosen)):
                m3 = list(m2)
                ok = True
                for p, q in zip(chosen, qs):
                    m3[p.a] &= bit(q, k)
                    xcol = p.i + 1 if cyc_eq(q, p.i + 2, k) else p.i - 1
                    for x in bits(g.masks[p.a] & L.X[p.i - 1]):
                        m3[x] &= bit(xcol, k)
                        ok &= m3[x] != 0
                    ok &= m3[p.a] != 0
                if not ok:
                    continue
                Q = 0
                A = 0
                for p in chosen:
                    Q |= (1 << p.b) | (1 << p.c)
                    A |= (g.masks[p.a] & L.X[p.i - 1]) | (1 << p.a) | (1 << p.b) | (1 << p.c)
                for i in Istar:
                    p, x = star_choice[i]
                    Q |= (1 << p.b) | (1 << p.c) | (1 << x)
                    A |= (1 << x) | (1 << p.a) | (1 << p.b) | (1 << p.c)
                for qcol in _local_colorings(g, bits(Q), m3, cycle_target(k).adj):
                    m4 = list(m3)
                    for v, c in qcol.items():
                        m4[v] = bit(c, k)
                    prov = sub.provenance + ((tuple(I), tuple((p.a, p.b, p.c) for p in chosen),
                                              qs, tuple(sorted(qcol.items()))),)
                    child = _rebuild(g, sub, m4, A, sub.round + 1, prov)
                    if child is not None:
                        yield child


def cyc_eq(a: int, b: int, k: int) -> bool:
    return (a - b) % k == 0


# --- Phase IV / V ------------------------------------------------------------

def reduce_z_lists(g: Graph, sub: Subinstance) -> list[int]:
    """New masks with every Z list cut by the c_1/c_2 rule."""
    L = sub.layers
    k = L.k
    masks = list(sub.masks)
    if _nbhd(g, L.Z) & L.Z:
        raise NotP9Free("Z is not stable")
    for z in bits(L.Z):
        idx = [i for i in range(1, k + 1) if g.masks[z] & L.Y[i - 1]]
        if len(idx) != 1:
            raise NotP9Free(f"vertex {z} of Z sees {len(idx)} Y parts")
        i = idx[0]
        lz = masks[z]
        c1 = bit(i - 1, k) if lz & bit(i - 1, k) else lz & bit(i - 3, k)
        c2 = bit(i + 1, k) if lz & bit(i + 1, k) else lz & bit(i + 3, k)
        masks[z] = c1 | c2
    return masks


def reduce_y_lists(g: Graph, sub: Subinstance, masks: list[int]) -> list[int] | None:
    """Phase V on Z-reduced masks. None when infeasible."""
    L = sub.layers
    k = L.k
    masks = list(masks)
    if any(m == 0 for m in masks):
        return None
    sxy = L.S | L.x_all | L.y_all
    if not reduce_masks(g, masks, k, within=sxy):
        return None
    S2 = 0
    for v in bits(sxy):
        if popcount(masks[v]) == 1:
            S2 |= 1 << v
    X2 = 0
    for v in bits((L.x_all | L.y_all) & ~S2):
        m = masks[v]
        if any(m & ~pair_mask(i, k) == 0 for i in range(1, k + 1)):
            X2 |= 1 << v
    Yparts = [0] * k
    left = L.y_all & ~(S2 | X2)
    for i in range(1, k + 1):
        for v in bits(left):
            if masks[v] & ~triple_mask(i, k) == 0:
                Yparts[i - 1] |= 1 << v
        left &= ~Yparts[i - 1]
    if left or (L.x_all & ~(S2 | X2)):
        raise NotP9Free("a layer vertex fits no part after reduction")
    Y2 = 0
    where = {}
    for i in range(1, k + 1):
        Y2 |= Yparts[i - 1]
        for v in bits(Yparts[i - 1]):
            where[v] = i
    Z = L.Z
    new = list(masks)
    rest = induced_subgraph(g, bits(Y2 | Z))
    for comp in connected_components(rest.graph):
        verts = [rest.original[v] for v in comp]
        ys = [v for v in verts if v in where]
        if not ys:
            continue
        idx = sorted({where[v] for v in ys})
        has_z = len(ys) < len(verts)
        if len(idx) == 1:
            i = idx[0]
            ymask = sum(1 << v for v in ys)
            if not has_z and len(verts) == 1:
                v = verts[0]
                if popcount(masks[v]) == 3:
                    new[v] = bit(i, k)
            else:
                # only ends of an edge inside Y'_i are forced onto {i-2, i+2};
                # a Y'_i vertex whose neighbours in C all lie in Z keeps its list
                for v in ys:
                    if g.masks[v] & ymask:
                        new[v] = masks[v] & (bit(i + 2, k) | bit(i - 2, k)) if k == 5 else 0
        else:
            if has_z or len(idx) > 2:
                raise NotP9Free("component of Y u Z meets Z and two Y parts, or three Y parts")
            i, j = idx
            for v in ys:
                if any(where[u] == where[v] for u in bits(g.masks[v]) if u in where):
                    raise NotP9Free("edge inside one Y part in a two-part component")
            if cyc_eq(j, i + 1, k):
                lo, hi = i, j
            elif cyc_eq(i, j + 1, k):
                lo, hi = j, i
            else:
                continue
            for v in ys:
                if popcount(masks[v]) != 3:
                    continue
                if where[v] == lo:
                    new[v] = masks[v] & ~bit(lo - 2, k)
                else:
                    new[v] = masks[v] & ~bit(lo + 3, k)
    if any(m == 0 for m in new):
        return None
    return new


def finalize_2sat(g: Graph, masks: list[int], k: int) -> list[int] | None:
    """Solve an instance whose 3-lists form a stable set of {i, i-2, i+2}
    lists; everything else has at most two colours.

    Each 3-list vertex v is eliminated: a neighbour u coloured c leaves v the
    compatible set {c-1, c+1} & L(v). Those sets are intervals of the order
    (i-2, i, i+2), so pairwise intersection already gives a common colour,
    and binary clauses on the neighbours are enough.
    """
    if any(m == 0 for m in masks):
        return None
    target = cycle_target(k)
    A = [v for v in range(g.n) if popcount(masks[v]) == 3]
    Aset = set(A)
    if any(popcount(masks[v]) > 3 for v in range(g.n)):
        raise NotP9Free("a list with more than three colours reached the final 2-SAT")
    rest = [v for v in range(g.n) if v not in Aset]
    lists = ListAssignment(k, tuple(masks))
    f = encode_list_hom(g, lists, target, rest)
    comp_of = {}
    for v in A:
        i = triple_center(masks[v], k)
        if i is None:
            raise NotP9Free(f"3-list of vertex {v} is not of the form {{i, i-2, i+2}}")
        if g.masks[v] & sum(1 << a for a in A):
            raise NotP9Free("vertices with 3-lists are adjacent")
        outer = bit(i - 2, k) | bit(i + 2, k)
        opts = []
        for u in sorted(g.adj[v]):
            for c in colors_of(masks[u]):
                comp = masks[v] & target.adj[c]
                if comp == outer:
                    raise NotP9Free("compatible set is not an interval")
                comp_of[(v, u, c)] = comp
                if comp == 0:
                    f.add(f.lit(u, c, False))
                opts.append((u, c, comp))
        for a in range(len(opts)):
            u, cu, ca = opts[a]
            for b in range(a + 1, len(opts)):
                w, cw, cb = opts[b]
                if u != w and ca and cb and not ca & cb:
                    f.add(f.lit(u, cu, False), f.lit(w, cw, False))
    sol = solve_2sat(f)
    if sol is None:
        return None
    col = [0] * g.n
    for x, val in enumerate(sol):
        if val:
            v, c = f.decode_map[x]
            col[v] = c
    for v in A:
        inter = masks[v]
        for u in g.adj[v]:
            inter &= comp_of[(v, u, col[u])]
        if not inter:
            raise NotP9Free(f"no common colour left for vertex {v}")
        col[v] = min_color(inter)
    return col


# --- driver ------------------------------------------------------------------

def _explore(g: Graph, sub: Subinstance, stats: SolveStats, parent_depth: int | None,
             strict: bool, prune: bool) -> list[int] | None:
    stats.nodes += 1
    # sound pruning only: arc consistency on a copy, the lists are left as they are
    if prune and not ac_masks(g, list(sub.masks), cycle_target(sub.layers.k)):
        stats.pruned += 1
        return None
    paths = find_bad_paths(g, sub)
    if any(paths):
        stats.entered_phase3 = True
        depth = min_starter_depth(g, sub, paths)
        if sub.round:
            stats.steps.append((sub.round, parent_depth, depth))
            if strict and parent_depth is not None and depth <= parent_depth:
                raise NotP9Free(f"starter depth did not grow ({parent_depth} -> {depth})")
        if sub.round >= MAX_ROUNDS:
            raise NotP9Free(f"bad paths survive {MAX_ROUNDS} rounds")
        for child in branch_phase3(g, sub, paths):
            found = _explore(g, child, stats, depth, strict, prune)
            if found is not None:
                return found
        return None
    if sub.round:
        stats.steps.append((sub.round, parent_depth, None))
    stats.max_round = max(stats.max_round, sub.round)
    t0 = time.perf_counter()
    masks = reduce_z_lists(g, sub)
    masks = reduce_y_lists(g, sub, masks)
    found = None if masks is None else finalize_2sat(g, masks, sub.layers.k)
    stats.tick("2sat", time.perf_counter() - t0)
    return found


def _solve_from_seed_coloring(g: Graph, masks, k: int, seed: list[int], coloring: dict,
                              strict: bool = True, prune: bool = True) -> tuple[list[int] | None, SolveStats]:
    stats = SolveStats(seed=list(seed), seed_colorings=1)
    m = list(masks)
    for v, c in coloring.items():
        m[v] = bit(c, k)
    S = 0
    for v in seed:
        S |= 1 << v
    layers = partition_layers(g, S, m, k)
    if not canonicalize(g, m, layers):
        return None, stats
    sub = Subinstance(tuple(m), layers, 0, (tuple(sorted(coloring.items())),))
    return _explore(g, sub, stats, None, strict, prune), stats


def _worker(args):
    return _solve_from_seed_coloring(*args)


def solve_p9free(g: Graph, lists: ListAssignment, k: int, stats: SolveStats | None = None,
                 jobs: int = 1, check_p9: bool = True, strict: bool = True,
                 prune: bool = True) -> list[int] | None:
    """Layered branching algorithm on a connected triangle-free graph.

    prune: skip subinstances that arc consistency already refutes (sound,
    it only discards branches without colourings). strict: raise NotP9Free
    when a Phase-III child fails to increase the minimum starter depth.
    """
    if k not in P9_ODD:
        raise Unsupported(f"the layered algorithm covers k in {P9_ODD}, got {k}")
    if stats is None:
        stats = SolveStats()
    if g.n == 0:
        return []
    t0 = time.perf_counter()
    if check_p9 and find_induced_path(g, 9) is not None:
        raise NotP9Free("graph contains an induced P_9")
    try:
        seed = find_seed(g)
    except NoSeed as e:
        raise NotP9Free(str(e)) from None
    stats.seed = seed
    stats.tick("seed", time.perf_counter() - t0)
    t0 = time.perf_counter()
    masks = list(lists.masks)
    cols = seed_colorings(g, seed, masks, k)
    result = None
    if jobs > 1 and len(cols) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_worker, (g, masks, k, seed, c, strict, prune)) for c in cols]
            # first success in seed-colouring order, whatever finishes first
            for fut in futures:
                found, st = fut.result()
                stats.merge(st)
                if found is not None:
                    result = found
                    for rest in futures:
                        rest.cancel()
                    break
    else:
        for c in cols:
            found, st = _solve_from_seed_coloring(g, masks, k, seed, c, strict, prune)
            stats.merge(st)
            if found is not None:
                result = found
                break
    stats.tick("branching", time.perf_counter() - t0)
    if result is not None and not verify(g, lists, cycle_target(k), result):
        raise AssertionError("layered solver produced an invalid colouring")
    return result


def solve(g: Graph, lists: ListAssignment | None, k: int, stats: SolveStats | None = None,
          jobs: int = 1, prune: bool = True) -> list[int] | None:
    """Dispatch by k: layered algorithm for 5, 7, 9 (per component, after a
    triangle check), localized solver for k >= 10, Unsupported otherwise."""
    from .winding import solve_localized

    if lists is None:
        lists = ListAssignment.full(g.n, k)
    if lists.k != k or len(lists) != g.n:
        raise ValueError("list assignment does not match the graph and k")
    if k >= 10:
        return solve_localized(g, lists, k)
    if k not in P9_ODD:
        raise Unsupported(f"k={k} is outside the supported range (5, 7, 9 or >= 10)")
    if stats is None:
        stats = SolveStats()
    col = [0] * g.n
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        if not is_triangle_free(sub.graph):
            return None
        part = solve_p9free(sub.graph, lists.restrict(sub.original), k, stats, jobs, prune=prune)
        if part is None:
            return None
        for i, c in enumerate(part):
            col[sub.original[i]] = c
    return col
