"""Homomorphisms of graphs into cycles: list C_k-colouring on P_9-free graphs,
an exact oracle, and hardness gadget generators."""
from .errors import CapExceeded, FormatError, GraphError, NoSeed, NotAWalk, NotP9Free, Unsupported
from .gadgets import Verdict, classify
from .graph import Graph, build_graph
from .lists import ListAssignment, cycle_target
from .oracle import enumerate_all, solve_exact, verify
from .solver import SolveStats, solve, solve_p9free
from .winding import solve_localized

__all__ = [
    "CapExceeded", "FormatError", "Graph", "GraphError", "ListAssignment", "NoSeed", "NotAWalk",
    "NotP9Free", "SolveStats", "Unsupported", "Verdict", "build_graph", "classify",
    "cycle_target", "enumerate_all", "solve", "solve_exact", "solve_localized", "solve_p9free",
    "verify",
]
