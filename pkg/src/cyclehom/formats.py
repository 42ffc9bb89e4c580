"""Plain-text formats.

graph       first non-comment line `n m`, then m lines `u v` (0-based)
lists       one line `v: c1 c2 ...` per vertex; omitted vertices get 1..k
colouring   lines `v <vertex> <colour>`; a leading `SAT` line is allowed
metadata    `key: value` lines
formula     DIMACS CNF
hypergraph  `n m`, m lines `a b c`, then optional `fix <vertex> <colour>` lines

`#` starts a comment line everywhere (DIMACS uses `c`).
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import FormatError, GraphError
from .graph import Graph, build_graph
from .lists import ListAssignment, colors_of, mask_of_colors


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _ints(no: int, line: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"line {no}: expected integers, got {line!r}") from None
    if count is not None and len(vals) != count:
        raise FormatError(f"line {no}: expected {count} integers, got {len(vals)}")
    return vals


# --- graphs ------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    no, head = lines[0]
    n, m = _ints(no, head, 2)
    if n < 0 or m < 0:
        raise FormatError(f"line {no}: negative counts")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = [tuple(_ints(no, line, 2)) for no, line in body]
    try:
        return build_graph(n, edges)
    except GraphError as e:
        raise FormatError(str(e)) from None


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


# --- lists -------------------------------------------------------------------

def parse_lists(text: str, n: int, k: int) -> ListAssignment:
    full = (1 << k) - 1
    masks = [full] * n
    seen = set()
    for no, line in _lines(text):
        if ":" not in line:
            raise FormatError(f"line {no}: expected `v: c1 c2 ...`")
        left, right = line.split(":", 1)
        (v,) = _ints(no, left, 1)
        if not 0 <= v < n:
            raise FormatError(f"line {no}: vertex {v} outside 0..{n - 1}")
        if v in seen:
            raise FormatError(f"line {no}: vertex {v} listed twice")
        seen.add(v)
        cols = _ints(no, right)
        for c in cols:
            if not 1 <= c <= k:
                raise FormatError(f"line {no}: colour {c} outside 1..{k}")
        masks[v] = mask_of_colors(cols, k)
    return ListAssignment(k, tuple(masks))


def format_lists(lists: ListAssignment, include_full: bool = False) -> str:
    full = (1 << lists.k) - 1
    out = []
    for v, m in enumerate(lists.masks):
        if m != full or include_full:
            out.append(f"{v}: " + " ".join(map(str, colors_of(m))))
    return "\n".join(out) + ("\n" if out else "")


def lists_from_precoloring(n: int, k: int, pre: Mapping[int, int]) -> ListAssignment:
    return ListAssignment.precolored(n, k, pre)


# --- colourings --------------------------------------------------------------

def parse_coloring(text: str) -> dict[int, int]:
    col: dict[int, int] = {}
    for no, line in _lines(text):
        toks = line.split()
        if toks == ["SAT"]:
            continue
        if toks == ["UNSAT"]:
            raise FormatError(f"line {no}: file reports UNSAT, no colouring")
        if len(toks) != 3 or toks[0] != "v":
            raise FormatError(f"line {no}: expected `v <vertex> <colour>`")
        v, c = _ints(no, " ".join(toks[1:]), 2)
        if v in col:
            raise FormatError(f"line {no}: vertex {v} coloured twice")
        col[v] = c
    return col


def format_coloring(col: Sequence[int]) -> str:
    return "".join(f"v {v} {c}\n" for v, c in enumerate(col))


# --- metadata ----------------------------------------------------------------

def format_metadata(meta: Mapping[str, object]) -> str:
    out = []
    for key, value in meta.items():
        text = str(value).replace("\n", " ")
        out.append(f"{key}: {text}")
    return "\n".join(out) + "\n"


def parse_metadata(text: str) -> dict[str, str]:
    meta = {}
    for no, line in _lines(text):
        if ":" not in line:
            raise FormatError(f"line {no}: expected `key: value`")
        key, value = line.split(":", 1)
        meta[key.strip()] = value.strip()
    return meta


# --- formulas ----------------------------------------------------------------

def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    nvars = None
    declared = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            toks = line.split()
            if len(toks) != 4 or toks[1] != "cnf":
                raise FormatError(f"line {no}: bad problem line")
            nvars, declared = int(toks[2]), int(toks[3])
            continue
        if nvars is None:
            raise FormatError(f"line {no}: clause before `p cnf` line")
        for lit in _ints(no, line):
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                if abs(lit) > nvars:
                    raise FormatError(f"line {no}: literal {lit} exceeds {nvars} variables")
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if nvars is None:
        raise FormatError("missing `p cnf` line")
    if declared != len(clauses):
        raise FormatError(f"header announces {declared} clauses, found {len(clauses)}")
    return nvars, clauses


def format_dimacs(nvars: int, clauses: Iterable[Sequence[int]]) -> str:
    clauses = list(clauses)
    out = [f"p cnf {nvars} {len(clauses)}"]
    out += [" ".join(map(str, cl)) + " 0" for cl in clauses]
    return "\n".join(out) + "\n"


# --- hypergraphs -------------------------------------------------------------

def parse_hypergraph(text: str) -> tuple[int, list[tuple[int, int, int]], dict[int, int]]:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty hypergraph file")
    no, head = lines[0]
    n, m = _ints(no, head, 2)
    edges = []
    fixed: dict[int, int] = {}
    for no, line in lines[1:]:
        if line.startswith("fix"):
            v, c = _ints(no, line[3:], 2)
            fixed[v] = c
        else:
            edges.append(tuple(_ints(no, line, 3)))
    if len(edges) != m:
        raise FormatError(f"header announces {m} hyperedges, found {len(edges)}")
    return n, edges, fixed


def format_hypergraph(n: int, edges, fixed: Mapping[int, int] | None = None) -> str:
    out = [f"{n} {len(edges)}"]
    out += [" ".join(map(str, e)) for e in edges]
    out += [f"fix {v} {c}" for v, c in sorted((fixed or {}).items())]
    return "\n".join(out) + "\n"


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
