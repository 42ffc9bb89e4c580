"""Command-line front end: solve | verify | generate | check.

Exit codes follow SAT-solver habit: 0 satisfiable / valid, 1 unsatisfiable /
invalid, 2 usage, parse or structural errors.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass, field

from . import formats
from .errors import FormatError, GraphError, NotP9Free, Unsupported
from .gadgets import (VARIANTS, Formula, GadgetInstance, Hypergraph, build_chain_gadget,
                      classify, monotone3sat_to_listinstance, nae3sat_to_coloring,
                      nonrainbow_to_extension, reduce_degree_instance, subdivide,
                      subdivide_instance)
from .graph import (girth, is_bipartite, is_connected, is_in_gamma_p, is_pt_free,
                    is_triangle_free, max_degree)
from .instances import InstanceConfig, p9free_graph, random_lists
from .lists import ListAssignment, cycle_target
from .oracle import solve_exact, verify
from .solver import P9_ODD, SolveStats, solve
from .winding import solve_localized

ALGOS = ("auto", "p9", "localized", "oracle")
GADGETS = ("subdivide", "chain", "degree-reduce", "nonrainbow", "nae", "monotone-list", "random")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    k: int | None = None
    algo: str = "auto"
    lists: str | None = None
    out: str | None = None
    seed: int = 0
    jobs: int = 1
    bench: bool = False
    params: dict[str, str] = field(default_factory=dict)
    pt: list[int] = field(default_factory=list)
    gamma: list[int] = field(default_factory=list)
    variant: str | None = None

    def validate(self) -> None:
        if self.k is not None and self.k < 3:
            raise UsageError("--k must be at least 3")
        if self.algo not in ALGOS:
            raise UsageError(f"--algo must be one of {ALGOS}")
        if self.command == "solve" and self.k is not None:
            if self.algo == "p9" and self.k not in P9_ODD:
                raise UsageError("--algo p9 needs k in {5, 7, 9}")
            if self.algo == "localized" and self.k < 10:
                raise UsageError("--algo localized needs k >= 10")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")


def _load(cfg: RunConfig):
    g = formats.parse_graph(formats.read_text(cfg.inputs[0]))
    lists = None
    if cfg.lists:
        lists = formats.parse_lists(formats.read_text(cfg.lists), g.n, cfg.k)
    return g, lists


def _emit(text: str, path: str | None) -> None:
    if path:
        formats.write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_solve(cfg: RunConfig) -> int:
    g, lists = _load(cfg)
    k = cfg.k
    lists = lists or ListAssignment.full(g.n, k)
    stats = SolveStats()
    t0 = time.perf_counter()
    if cfg.algo == "oracle":
        col = solve_exact(g, lists)
    elif cfg.algo == "p9":
        col = solve(g, lists, k, stats, jobs=cfg.jobs)
    elif cfg.algo == "localized":
        col = solve_localized(g, lists, k)
    else:
        try:
            col = solve(g, lists, k, stats, jobs=cfg.jobs)
        except (NotP9Free, Unsupported) as e:
            print(f"warning: {e}; falling back to the exact oracle", file=sys.stderr)
            col = solve_exact(g, lists)
    total = time.perf_counter() - t0
    if cfg.bench:
        for key in ("seed", "branching", "2sat"):
            print(f"bench {key} {stats.timings.get(key, 0.0):.6f}", file=sys.stderr)
        print(f"bench nodes {stats.nodes}", file=sys.stderr)
        print(f"bench total {total:.6f}", file=sys.stderr)
    if col is None:
        _emit("UNSAT\n", cfg.out)
        return 1
    assert verify(g, lists, cycle_target(k), col)
    _emit("SAT\n" + formats.format_coloring(col), cfg.out)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if len(cfg.inputs) != 2:
        raise UsageError("verify needs a graph file and a colouring file")
    g, lists = _load(cfg)
    try:
        col = formats.parse_coloring(formats.read_text(cfg.inputs[1]))
    except FormatError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return 1
    ok = verify(g, lists, cycle_target(cfg.k), col) and set(col) == set(range(g.n))
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def _param(cfg: RunConfig, key: str, default=None, cast=int):
    if key in cfg.params:
        try:
            return cast(cfg.params[key])
        except ValueError:
            raise UsageError(f"bad value for {key}: {cfg.params[key]!r}") from None
    if default is None:
        raise UsageError(f"missing parameter {key}=...")
    return default


def _formula(cfg: RunConfig, kind: str) -> Formula:
    nvars, clauses = formats.parse_dimacs(formats.read_text(_param(cfg, "formula", cast=str)))
    return Formula(nvars, tuple(clauses), kind)


def build_instance(cfg: RunConfig) -> GadgetInstance:
    name = cfg.inputs[0]
    if name == "chain":
        return build_chain_gadget(_param(cfg, "d"), _param(cfg, "k", cfg.k))
    if name == "subdivide":
        g = formats.parse_graph(formats.read_text(_param(cfg, "graph", cast=str)))
        if "m" in cfg.params:
            m = _param(cfg, "m")
            return GadgetInstance(subdivide(g, m), cfg.k or 0, meta={
                "gadget": "subdivide", "m": m, "source_vertices": g.n, "source_edges": g.m})
        return subdivide_instance(g, _param(cfg, "s", 2))
    if name == "degree-reduce":
        g = formats.parse_graph(formats.read_text(_param(cfg, "graph", cast=str)))
        return reduce_degree_instance(g, _param(cfg, "k", cfg.k))
    if name == "nonrainbow":
        n, edges, fixed = formats.parse_hypergraph(formats.read_text(_param(cfg, "hypergraph", cast=str)))
        return nonrainbow_to_extension(Hypergraph(n, tuple(edges), fixed), _param(cfg, "s", 2))
    if name == "nae":
        s = _param(cfg, "s", 2)
        d = _param(cfg, "d", s * (2 * s - 1))
        return nae3sat_to_coloring(_formula(cfg, "nae3sat"), s, d)
    if name == "monotone-list":
        return monotone3sat_to_listinstance(_formula(cfg, "monotone3sat"), _param(cfg, "s", 3),
                                            _param(cfg, "g", 4))
    if name == "random":
        k = _param(cfg, "k", cfg.k or 5)
        icfg = InstanceConfig(max_n=_param(cfg, "n", 14), min_n=_param(cfg, "min_n", 2))
        rng = random.Random(cfg.seed)
        g = p9free_graph(rng, icfg)
        return GadgetInstance(g, k, lists=random_lists(rng, g.n, k, icfg),
                              meta={"gadget": "random", "seed": cfg.seed, "k": k})
    raise UsageError(f"unknown gadget {name!r}; choose from {GADGETS}")


def cmd_generate(cfg: RunConfig) -> int:
    inst = build_instance(cfg)
    meta = dict(inst.meta)
    meta["vertices"] = inst.graph.n
    meta["edges"] = inst.graph.m
    lists = None
    if inst.lists is not None:
        lists = inst.lists
    elif inst.precoloring:
        lists = inst.list_assignment()
    if cfg.out is None:
        if lists is not None:
            raise UsageError("this gadget emits lists; pass --out PREFIX")
        sys.stdout.write(formats.format_graph(inst.graph, [f"{k}: {v}" for k, v in meta.items()]))
        return 0
    formats.write_text(cfg.out + ".graph", formats.format_graph(inst.graph))
    if lists is not None:
        formats.write_text(cfg.out + ".lists", formats.format_lists(lists))
    formats.write_text(cfg.out + ".meta", formats.format_metadata(meta))
    return 0


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(cfg: RunConfig) -> int:
    g = formats.parse_graph(formats.read_text(cfg.inputs[0]))
    gi = girth(g)
    out = [
        f"vertices={g.n}",
        f"edges={g.m}",
        f"connected={_yes(is_connected(g))}",
        f"trianglefree={_yes(is_triangle_free(g))}",
        f"bipartite={_yes(is_bipartite(g))}",
        f"girth={gi if gi is not None else 'inf'}",
        f"maxdegree={max_degree(g)}",
    ]
    out += [f"p{t}free={_yes(is_pt_free(g, t))}" for t in cfg.pt]
    out += [f"gamma{p}={_yes(is_in_gamma_p(g, p))}" for p in cfg.gamma]
    if cfg.variant is not None:
        if cfg.k is None:
            raise UsageError("--classify needs --k")
        out.append(f"verdict={classify(g, cfg.k, cfg.variant)}")
    _emit("\n".join(out) + "\n", cfg.out)
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclehom", description="Homomorphisms into cycles.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_k):
        p.add_argument("--k", type=int, required=need_k)
        p.add_argument("--out")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("solve", help="decide and find a (list) C_k-colouring")
    p.add_argument("graph")
    common(p, True)
    p.add_argument("--lists")
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--bench", action="store_true", help="phase timings on stderr")

    p = sub.add_parser("verify", help="check a colouring")
    p.add_argument("graph")
    p.add_argument("coloring")
    common(p, True)
    p.add_argument("--lists")

    p = sub.add_parser("generate", help="emit a hardness instance")
    p.add_argument("gadget", choices=GADGETS)
    p.add_argument("params", nargs="*", metavar="key=value")
    common(p, False)

    p = sub.add_parser("check", help="structural report on a graph")
    p.add_argument("graph")
    common(p, False)
    p.add_argument("--pt", type=int, action="append", default=[], metavar="T")
    p.add_argument("--gamma", type=int, action="append", default=[], metavar="P")
    p.add_argument("--classify", choices=VARIANTS, dest="variant")
    return ap


def config_from_args(argv) -> RunConfig:
    ns = _parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, k=ns.k, out=ns.out, seed=ns.seed)
    if ns.command == "solve":
        cfg.inputs = [ns.graph]
        cfg.lists, cfg.algo, cfg.jobs, cfg.bench = ns.lists, ns.algo, ns.jobs, ns.bench
    elif ns.command == "verify":
        cfg.inputs = [ns.graph, ns.coloring]
        cfg.lists = ns.lists
    elif ns.command == "generate":
        cfg.inputs = [ns.gadget]
        for tok in ns.params:
            if "=" not in tok:
                raise UsageError(f"expected key=value, got {tok!r}")
            key, value = tok.split("=", 1)
            cfg.params[key] = value
    else:
        cfg.inputs = [ns.graph]
        cfg.pt, cfg.gamma, cfg.variant = ns.pt, ns.gamma, ns.variant
    return cfg


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "generate": cmd_generate, "check": cmd_check}


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except SystemExit as e:  # argparse
        return 2 if e.code else 0
    except (UsageError, FormatError, GraphError, NotP9Free, Unsupported, ValueError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
