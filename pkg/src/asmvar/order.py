"""Strong (Bruhat) order on ASM(n).

A <= B iff rk_A >= rk_B entrywise.  Joins and meets are pointwise min and
max of rank functions, which makes ASM(n) a lattice containing S_n.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cache, lru_cache

import numpy as np

from .asm_core import (
    Asm,
    AsmError,
    BigrassTriple,
    Cell,
    Permutation,
    RankMatrix,
    as_asm,
    asm_from_rank,
    asm_to_perm,
    bigrassmannian,
    coxeter_length,
    perm_to_asm,
)

DEFAULT_MAX_N = 6


class BoundExceeded(ValueError):
    """Raised when an exhaustive computation is asked for too large an n."""


@dataclass(frozen=True)
class AsmSet:
    """Ordered collection of distinct ASMs of a common size."""

    n: int
    members: tuple[Asm, ...]

    def __post_init__(self):
        if any(A.n != self.n for A in self.members):
            raise AsmError("AsmSet members must share n")
        if len(set(self.members)) != len(self.members):
            raise AsmError("AsmSet members must be distinct")

    @classmethod
    def sorted(cls, n, members: Iterable[Asm]) -> AsmSet:
        return cls(n, tuple(sorted(set(members), key=Asm.key)))

    def __iter__(self) -> Iterator[Asm]:
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, A):
        return A in self.members

    def __getitem__(self, k):
        return self.members[k]


def _same_n(A, B):
    if A.n != B.n:
        raise AsmError(f"size mismatch: {A.n} vs {B.n}")


def leq_strong(A, B) -> bool:
    A, B = as_asm(A), as_asm(B)
    _same_n(A, B)
    ra, rb = A.rank.values, B.rank.values
    return all(x >= y for row_a, row_b in zip(ra, rb) for x, y in zip(row_a, row_b))


def _combine(U, fn) -> Asm:
    U = [as_asm(A) for A in U]
    if not U:
        raise ValueError("join/meet of an empty set")
    for A in U:
        _same_n(U[0], A)
    stack = np.stack([A.rank.array() for A in U])
    return asm_from_rank(RankMatrix.from_array(fn(stack, axis=0)).check())


def join(U) -> Asm:
    """Least upper bound: pointwise minimum of rank functions."""
    return _combine(U, np.min)


def meet(U) -> Asm:
    """Greatest lower bound: pointwise maximum of rank functions."""
    return _combine(U, np.max)


# --------------------------------------------------------------------------
# enumeration


def _asm_rows(n, colsum):
    """Rows extending the column partial sums ``colsum`` (each in {0,1})."""
    row = [0] * n

    def rec(j, p):
        if j == n:
            if p == 1:
                yield tuple(row)
            return
        for a in (-1, 0, 1):
            if p + a in (0, 1) and colsum[j] + a in (0, 1):
                row[j] = a
                yield from rec(j + 1, p + a)
        row[j] = 0

    yield from rec(0, 0)


@cache
def _enumerate(n) -> tuple[Asm, ...]:
    out = []
    rows: list[tuple[int, ...]] = []

    def rec(colsum):
        if len(rows) == n:
            if all(c == 1 for c in colsum):
                out.append(Asm(tuple(rows)))
            return
        for r in _asm_rows(n, colsum):
            rows.append(r)
            rec(tuple(c + a for c, a in zip(colsum, r)))
            rows.pop()

    rec((0,) * n)
    return tuple(out)


def enumerate_asms(n, max_n=DEFAULT_MAX_N) -> AsmSet:
    """All of ASM(n), lexicographic on flattened entries."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise BoundExceeded(f"n = {n} exceeds the enumeration bound {max_n}")
    return AsmSet(n, _enumerate(n))


# --------------------------------------------------------------------------
# covers


def bump_at_essential(A: Asm, c: Cell) -> Asm:
    """Raise rk_A by one at the essential cell c via the local 2x2 update."""
    i, j = c
    if Cell(i, j) not in A.ess:
        raise AsmError(f"cell ({i},{j}) is not essential")
    rows = [list(r) for r in A.rows]
    rows[i - 1][j - 1] += 1
    rows[i][j] += 1
    rows[i][j - 1] -= 1
    rows[i - 1][j] -= 1
    return Asm.from_rows(rows)


def lower_covers(A) -> AsmSet:
    A = as_asm(A)
    return AsmSet.sorted(A.n, (bump_at_essential(A, c) for c in A.ess))


def upper_covers(A) -> AsmSet:
    A = as_asm(A)
    n = A.n
    R = A.rank.array()
    out = []
    for i in range(1, n):
        for j in range(1, n):
            if R[i, j] < 1:
                continue
            M = R.copy()
            M[i, j] -= 1
            cand = RankMatrix.from_array(M)
            if not cand.is_valid():
                continue
            B = asm_from_rank(cand)
            if Cell(i, j) in B.ess:
                out.append(B)
    return AsmSet.sorted(n, out)


# --------------------------------------------------------------------------
# permutation sets


@cache
def _perm_array(n) -> np.ndarray:
    from itertools import permutations
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int8)


def bruhat_lower_covers(w: Permutation) -> list[Permutation]:
    """Permutations w t_{ab} of length l(w) - 1."""
    o = w.oneline
    out = []
    for a in range(len(o)):
        for b in range(a + 1, len(o)):
            if o[a] > o[b] and not any(o[b] < o[k] < o[a] for k in range(a + 1, b)):
                v = list(o)
                v[a], v[b] = v[b], v[a]
                out.append(Permutation(tuple(v)))
    return out


def leq_perm(u: Permutation, w: Permutation) -> bool:
    return leq_strong(perm_to_asm(u), perm_to_asm(w))


@lru_cache(maxsize=4096)
def _perm_set(A: Asm) -> tuple[Permutation, ...]:
    w = asm_to_perm(A)
    if w is not None:
        return (w,)
    P = _perm_array(A.n)
    mask = np.ones(len(P), dtype=bool)
    R = A.rank
    for i, j in A.ess:
        mask &= (P[:, :i] <= j).sum(axis=1) <= R[i, j]
    above = {tuple(int(v) for v in row) for row in P[mask]}
    minimal = [p for p in above
               if not any(v.oneline in above for v in bruhat_lower_covers(Permutation(p)))]
    return tuple(sorted(Permutation(p) for p in minimal))


def perm_set(A) -> tuple[Permutation, ...]:
    """Bruhat-minimal permutations above A, sorted by one-line notation.

    A permutation w satisfies w >= A as soon as rk_w <= rk_A on ess(A).
    The set of such w is an upper set, so minimality only needs the Bruhat
    lower covers of each candidate.
    """
    return _perm_set(as_asm(A))


def codim(A) -> int:
    return min(coxeter_length(w) for w in perm_set(A))


def bigrass_decomposition(A) -> list[BigrassTriple]:
    A = as_asm(A)
    R = A.rank
    return [BigrassTriple(i, j, R[i, j], A.n) for i, j in sorted(A.ess)]


def bigrass_join(triples: list[BigrassTriple], n) -> Asm:
    if not triples:
        return perm_to_asm(Permutation.identity(n))
    return join([bigrassmannian(t) for t in triples])


def strong_hasse(members) -> list[tuple[int, int]]:
    """Cover pairs (lower, upper) among ``members`` by index, via rank dominance."""
    members = list(members)
    less = {(a, b) for a, A in enumerate(members) for b, B in enumerate(members)
            if a != b and leq_strong(A, B)}
    return sorted((a, b) for a, b in less
                  if not any((a, c) in less and (c, b) in less for c in range(len(members))))
