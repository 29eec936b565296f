"""DOT and JSON adjacency output for posets of ASMs and antichains."""

from __future__ import annotations

import json

from .antichains import enumerate_antichains, strong_hasse_anti
from .asm_core import Asm, as_asm
from .order import DEFAULT_MAX_N, enumerate_asms, leq_strong, lower_covers
from .weak_order import PosetGraph


def strong_poset(n, max_n=DEFAULT_MAX_N) -> PosetGraph:
    """Hasse diagram of strong order on ASM(n), each element pointing to its lower covers."""
    return _strong_graph(n, list(enumerate_asms(n, max_n)))


def strong_interval_below(A, max_n=DEFAULT_MAX_N) -> PosetGraph:
    A = as_asm(A)
    return _strong_graph(A.n, [B for B in enumerate_asms(A.n, max_n) if leq_strong(B, A)])


def _strong_graph(n, nodes: list[Asm]) -> PosetGraph:
    where = {A: k for k, A in enumerate(nodes)}
    edges = [(where[A], where[B], None) for A in nodes for B in lower_covers(A) if B in where]
    return PosetGraph(n, nodes, edges)


def strong_poset_anti(n) -> PosetGraph:
    nodes = enumerate_antichains(n)
    where = {a: k for k, a in enumerate(nodes)}
    return PosetGraph(n, nodes, [(where[hi], where[lo], None) for lo, hi in strong_hasse_anti(n)])


def to_json(g: PosetGraph) -> dict:
    """``{"nodes": [...], "edges": [[from, to, label], ...]}``."""
    return {"nodes": g.labels(), "edges": [[s, t, i] for s, t, i in g.edges]}


def to_dot(g: PosetGraph, name="poset") -> str:
    lines = [f"digraph {name} {{"]
    for k, lab in enumerate(g.labels()):
        lines.append(f'  n{k} [label="{lab}"];')
    for s, t, i in g.edges:
        attr = f' [label="{i}"]' if i is not None else ""
        lines.append(f"  n{s} -> n{t}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(g: PosetGraph, fmt="json") -> str:
    if fmt == "dot":
        return to_dot(g)
    return json.dumps(to_json(g)) + "\n"
