"""Weak order operators pi_i on ASMs, chains, and equidimensionality.

pi_i(A) is the strong-order minimum among ASMs whose rank function agrees
with rk_A off row i.  That minimum is the meet of a sublattice, and its row i
has the closed form

    rk'(i, j) = min(rk(i-1, j) + 1, rk(i+1, j)).

`pi_brute` computes the same thing straight from the definition and is kept
as the oracle.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cache, lru_cache

import numpy as np

from .asm_core import (
    Asm,
    AsmError,
    Permutation,
    RankMatrix,
    as_asm,
    asm_from_rank,
    coxeter_length,
    transpose,
)
from .order import DEFAULT_MAX_N, AsmSet, enumerate_asms, leq_perm, meet, perm_set


@dataclass
class PosetGraph:
    """Directed graph on poset elements, edges pointing downward.

    In an operator graph the edge (s, t, i) means nodes[t] = pi_i(nodes[s])
    != nodes[s].  Strong-order Hasse diagrams use the label None.
    """

    n: int
    nodes: list
    edges: list[tuple] = field(default_factory=list)

    def __post_init__(self):
        for s, t, i in self.edges:
            if s == t:
                raise ValueError("self-loop in poset graph")
            if i is not None and not 1 <= i <= max(self.n - 1, 0):
                raise ValueError(f"edge label {i} out of range")

    def labels(self) -> list[str]:
        return [str(v) for v in self.nodes]

    def index(self, v) -> int:
        return self.nodes.index(v)

    def edge_set(self) -> set:
        """Edges as (source, target, label) with node values rather than indices."""
        return {(self.nodes[s], self.nodes[t], i) for s, t, i in self.edges}


def _check_index(n, i):
    if not 1 <= i <= n - 1:
        raise AsmError(f"operator index {i} outside [1, {n - 1}]")


@lru_cache(maxsize=1 << 16)
def _pi(A: Asm, i: int) -> Asm:
    R = A.rank.array()
    new = np.minimum(R[i - 1] + 1, R[i + 1])
    if np.array_equal(new, R[i]):
        return A
    R[i] = new
    return asm_from_rank(RankMatrix.from_array(R))


def pi(A, i) -> Asm:
    """The weak order operator pi_i, via the closed-form rank row."""
    A = as_asm(A)
    _check_index(A.n, i)
    return _pi(A, i)


@cache
def _all_ranks(n, max_n):
    everything = enumerate_asms(n, max_n)
    return everything, np.stack([B.rank.array() for B in everything])


def pi_brute(A, i, max_n=DEFAULT_MAX_N) -> Asm:
    """pi_i straight from the definition: meet of all ASMs agreeing with A off row i."""
    A = as_asm(A)
    _check_index(A.n, i)
    everything, ranks = _all_ranks(A.n, max_n)
    keep = [k for k in range(A.n + 1) if k != i]
    agree = (ranks[:, keep] == A.rank.array()[keep]).all(axis=(1, 2))
    return meet([everything[k] for k in np.flatnonzero(agree)])


def pi_col(A, i) -> Asm:
    """Column operator pi_i^C(A) = pi_i(A^T)^T."""
    return transpose(pi(transpose(as_asm(A)), i))


def apply_word(A, word, flavor="row") -> Asm:
    """Apply a word of operators right to left, as in chain words."""
    op = pi if flavor == "row" else pi_col
    A = as_asm(A)
    for i in reversed(tuple(word)):
        A = op(A, i)
    return A


def descents(A) -> set[int]:
    A = as_asm(A)
    des = {i for i in range(1, A.n) if pi(A, i) != A}
    assert des == {c.row for c in A.ess}, "descents disagree with essential rows"
    return des


def maj(A) -> int:
    return sum(descents(A))


# --------------------------------------------------------------------------
# weak order as a graph


def _down(A: Asm):
    for i in range(1, A.n):
        B = _pi(A, i)
        if B != A:
            yield i, B


def is_weak_leq(A, B) -> bool:
    """A is reachable from B by operators pi_i."""
    A, B = as_asm(A), as_asm(B)
    if A.n != B.n:
        raise AsmError(f"size mismatch: {A.n} vs {B.n}")
    seen = {B}
    todo = deque([B])
    while todo:
        C = todo.popleft()
        if C == A:
            return True
        for _, D in _down(C):
            if D not in seen:
                seen.add(D)
                todo.append(D)
    return False


def _graph(n, nodes) -> PosetGraph:
    nodes = sorted(nodes, key=Asm.key)
    where = {A: k for k, A in enumerate(nodes)}
    edges = [(where[A], where[B], i) for A in nodes for i, B in _down(A)]
    return PosetGraph(n, nodes, edges)


def weak_poset(n, max_n=DEFAULT_MAX_N) -> PosetGraph:
    return _graph(n, enumerate_asms(n, max_n))


def interval_below(A) -> PosetGraph:
    """Weak order interval [identity, A] with all operator edges inside it."""
    A = as_asm(A)
    return _graph(A.n, weak_below_all(A))


def maximal_weak_elements(n, max_n=DEFAULT_MAX_N) -> AsmSet:
    """Elements with nothing strictly above them in weak order.

    A is below something iff it is the target of some strict operator edge,
    since any strict relation ends in such an edge.
    """
    everything = enumerate_asms(n, max_n)
    hit = {B for A in everything for _, B in _down(A)}
    return AsmSet(n, tuple(A for A in everything if A not in hit))


# --------------------------------------------------------------------------
# chains


def chains(A, max_len=None) -> Iterator[tuple[int, ...]]:
    """Chain words (a_1, ..., a_k) from the identity up to A.

    The word satisfies A_{m-1} = pi_{a_m}(A_m) with A_k = A, so a_k is the
    first operator applied to A.  Descents are tried in increasing order.
    """
    A = as_asm(A)

    def rec(B, depth):
        steps = list(_down(B))
        if not steps:
            yield ()
            return
        if max_len is not None and depth >= max_len:
            return
        for i, C in steps:
            for w in rec(C, depth + 1):
                yield w + (i,)

    yield from rec(A, 0)


def min_chain_length(A) -> int:
    A = as_asm(A)
    dist = {A: 0}
    todo = deque([A])
    while todo:
        B = todo.popleft()
        if not any(True for _ in _down(B)):
            return dist[B]
        for _, C in _down(B):
            if C not in dist:
                dist[C] = dist[B] + 1
                todo.append(C)
    raise AssertionError("weak order search never reached the identity")


@cache
def chain_lengths(A: Asm) -> frozenset:
    """All lengths of saturated chains from the identity to A."""
    steps = list(_down(A))
    if not steps:
        return frozenset({0})
    return frozenset(k + 1 for _, B in steps for k in chain_lengths(B))


def all_chains_equal_length(A) -> bool:
    return len(chain_lengths(as_asm(A))) == 1


def is_equidimensional(A) -> bool:
    return len({coxeter_length(w) for w in perm_set(A)}) == 1


def word_product(word, n) -> Permutation:
    w = Permutation.identity(n)
    for a in word:
        w = w.right_mul_simple(a)
    return w


def every_chain_word_is_reduced(A) -> bool:
    """Each chain word is reduced and its product lies above some member of Perm(A)."""
    A = as_asm(A)
    P = perm_set(A)
    for word in chains(A):
        w = word_product(word, A.n)
        if coxeter_length(w) != len(word):
            return False
        if not any(leq_perm(v, w) for v in P):
            return False
    return True


def weak_below_all(A) -> set[Asm]:
    """Every B with B weakly below A, including A."""
    A = as_asm(A)
    seen = {A}
    todo = [A]
    while todo:
        for _, D in _down(todo.pop()):
            if D not in seen:
                seen.add(D)
                todo.append(D)
    return seen
