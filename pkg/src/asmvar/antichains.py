"""Antichains in Bruhat order, standing for unions of matrix Schubert varieties.

An antichain is stored as a sorted tuple of pairwise incomparable
permutations.  Comparison of permutations is rank-matrix dominance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from itertools import product

from .asm_core import Asm, AsmError, Permutation, as_asm, perm_from_json, perms_of
from .grothendieck import groth_asm, inclusion_exclusion
from .order import BoundExceeded, join, leq_perm, meet, perm_set
from .polynomials import (
    MultiPoly,
    euler,
    k_divided_difference,
    nabla,
    substitute_y_zero,
)
from .weak_order import PosetGraph

ANTICHAIN_MAX_N = 4


@dataclass(frozen=True)
class Antichain:
    n: int
    perms: tuple[Permutation, ...]

    def __post_init__(self):
        if not self.perms:
            raise AsmError("an antichain must be nonempty")
        if any(w.n != self.n for w in self.perms):
            raise AsmError("antichain members must share n")
        if list(self.perms) != sorted(set(self.perms)):
            raise AsmError("antichain members must be distinct and sorted")
        for a, u in enumerate(self.perms):
            for v in self.perms[a + 1:]:
                if leq_perm(u, v) or leq_perm(v, u):
                    raise AsmError(f"{u} and {v} are comparable")

    def __str__(self):
        return "{" + ",".join(map(str, self.perms)) + "}"

    def __repr__(self):
        return f"Antichain({str(self)!r})"

    def __iter__(self):
        return iter(self.perms)

    def __len__(self):
        return len(self.perms)

    def key(self):
        return (len(self.perms), tuple(w.oneline for w in self.perms))

    def to_json(self):
        return {"n": self.n, "perms": [list(w.oneline) for w in self.perms]}

    @classmethod
    def parse(cls, text) -> Antichain:
        """``"213,132"`` style one-line notation or the JSON encoding."""
        if isinstance(text, dict):
            return antichain_from_json(text)
        return normalize(Permutation.parse(p) for p in text.strip("{} ").split(","))


def antichain_from_json(obj) -> Antichain:
    if isinstance(obj, str):
        obj = json.loads(obj)
    perms = [perm_from_json({"n": obj["n"], "oneline": p}) for p in obj["perms"]]
    A = normalize(perms)
    if len(A) != len(set(perms)):
        raise AsmError("input permutations are not pairwise incomparable")
    return A


def normalize(perms) -> Antichain:
    """Bruhat-minimal elements of a nonempty permutation set."""
    perms = sorted(set(perms))
    if not perms:
        raise AsmError("cannot normalize an empty set")
    keep = tuple(u for u in perms if not any(v != u and leq_perm(v, u) for v in perms))
    return Antichain(perms[0].n, keep)


def from_asm(A) -> Antichain:
    A = as_asm(A)
    return Antichain(A.n, perm_set(A))


def try_to_asm(ac: Antichain) -> Asm | None:
    """The ASM whose permutation set is ``ac``, or None if there is none."""
    B = meet(ac.perms)
    return B if perm_set(B) == ac.perms else None


def leq_strong_anti(a: Antichain, b: Antichain) -> bool:
    """X_a contains X_b: every member of b lies above some member of a."""
    if a.n != b.n:
        raise AsmError(f"size mismatch: {a.n} vs {b.n}")
    return all(any(leq_perm(w, u) for w in a) for u in b)


def _pi_perm(w: Permutation, i) -> Permutation:
    return w.right_mul_simple(i) if w(i) > w(i + 1) else w


def pi_anti(ac: Antichain, i) -> Antichain:
    if not 1 <= i <= ac.n - 1:
        raise AsmError(f"operator index {i} outside [1, {ac.n - 1}]")
    return normalize(_pi_perm(w, i) for w in ac)


def transpose_anti(ac: Antichain) -> Antichain:
    return normalize(w.inverse() for w in ac)


def pi_col_anti(ac: Antichain, i) -> Antichain:
    return transpose_anti(pi_anti(transpose_anti(ac), i))


def descents_anti(ac: Antichain) -> set[int]:
    return {i for i in range(1, ac.n) if pi_anti(ac, i) != ac}


def maj_anti(ac: Antichain) -> int:
    return sum(descents_anti(ac))


def codim_anti(ac: Antichain) -> int:
    return min(w.length() for w in ac)


def sum_of_antichain_ideals(*acs: Antichain) -> Antichain:
    """Antichain of the variety cut out by I_{a_1} + ... + I_{a_r}."""
    if not acs:
        raise ValueError("need at least one antichain")
    out = set()
    for tup in product(*(a.perms for a in acs)):
        out.update(perm_set(join(tup)))
    return normalize(out)


@cache
def _antichains(n) -> tuple[Antichain, ...]:
    perms = perms_of(n)
    comparable = {(u, v) for u in perms for v in perms if leq_perm(u, v) or leq_perm(v, u)}
    out = []

    def rec(k, chosen):
        if k == len(perms):
            if chosen:
                out.append(Antichain(n, tuple(sorted(chosen))))
            return
        rec(k + 1, chosen)
        w = perms[k]
        if not any((w, u) in comparable for u in chosen):
            rec(k + 1, chosen + [w])

    rec(0, [])
    return tuple(sorted(out, key=Antichain.key))


def enumerate_antichains(n, max_n=ANTICHAIN_MAX_N) -> list[Antichain]:
    """All nonempty antichains of S_n, by size and then lexicographically."""
    if n > max_n:
        raise BoundExceeded(f"antichain enumeration is limited to n <= {max_n}")
    return list(_antichains(n))


def weak_poset_anti(n, max_n=ANTICHAIN_MAX_N) -> PosetGraph:
    nodes = enumerate_antichains(n, max_n)
    where = {a: k for k, a in enumerate(nodes)}
    edges = []
    for a in nodes:
        for i in range(1, n):
            b = pi_anti(a, i)
            if b != a:
                edges.append((where[a], where[b], i))
    return PosetGraph(n, nodes, edges)


def strong_hasse_anti(n, max_n=ANTICHAIN_MAX_N) -> list[tuple[Antichain, Antichain]]:
    """Cover pairs (lower, upper) of the strong order on anti(n)."""
    nodes = enumerate_antichains(n, max_n)
    less = {(a, b) for a in nodes for b in nodes if a != b and leq_strong_anti(a, b)}
    return sorted(((a, b) for a, b in less
                   if not any((a, c) in less and (c, b) in less for c in nodes)),
                  key=lambda p: (p[0].key(), p[1].key()))


# --------------------------------------------------------------------------
# polynomials


def groth_anti(ac: Antichain, single=False) -> MultiPoly:
    f = inclusion_exclusion(ac.perms, groth_asm)
    return substitute_y_zero(f) if single else f


def check_ddo_anti(ac: Antichain, i) -> bool:
    b = pi_anti(ac, i)
    return all(k_divided_difference(groth_anti(ac, s), i) == groth_anti(b, s) for s in (False, True))


def derivative_sides_anti(ac: Antichain) -> tuple[MultiPoly, MultiPoly]:
    G = groth_anti(ac, single=True)
    lhs = maj_anti(transpose_anti(ac)) * G + nabla(G) - euler(G)
    rhs = MultiPoly.zero(ac.n)
    for i in range(1, ac.n):
        b = pi_col_anti(ac, i)
        if b != ac:
            rhs = rhs + i * groth_anti(b, single=True)
    return lhs, rhs


def check_derivative_anti(ac: Antichain) -> bool:
    lhs, rhs = derivative_sides_anti(ac)
    return lhs == rhs
