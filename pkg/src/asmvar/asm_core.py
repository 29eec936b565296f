"""Alternating sign matrices, permutations and corner-sum rank functions.

Everything here is 1-indexed in the public interface: rows and columns run
over ``1..n`` and rank matrices carry an explicit zeroth row and column.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations, permutations
from typing import NamedTuple

import numpy as np


class AsmError(ValueError):
    """Raised when a matrix, rank function or triple fails validation."""


class Cell(NamedTuple):
    row: int
    col: int


# --------------------------------------------------------------------------
# rank matrices


@dataclass(frozen=True)
class RankMatrix:
    """Corner-sum function on ``[0, n] x [0, n]``."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.values) != self.n + 1 or any(len(r) != self.n + 1 for r in self.values):
            raise AsmError(f"rank matrix must be {self.n + 1}x{self.n + 1}")

    def __getitem__(self, ij):
        i, j = ij
        return self.values[i][j]

    def __call__(self, i, j):
        return self.values[i][j]

    def array(self):
        return np.array(self.values, dtype=np.int64)

    @classmethod
    def from_array(cls, arr) -> RankMatrix:
        arr = np.asarray(arr, dtype=np.int64)
        n = arr.shape[0] - 1
        return cls(n, tuple(tuple(int(v) for v in row) for row in arr))

    def check(self):
        """Raise `AsmError` naming the first violated corner-sum condition."""
        n = self.n
        R = self.array()
        for i in range(n + 1):
            if R[i, 0] != 0 or R[0, i] != 0:
                raise AsmError(f"boundary condition: rk({i},0) and rk(0,{i}) must be 0")
            if i and (R[i, n] != i or R[n, i] != i):
                raise AsmError(f"boundary condition: rk({i},{n}) and rk({n},{i}) must equal {i}")
        dv = np.diff(R, axis=0)
        dh = np.diff(R, axis=1)
        bad = np.argwhere((dv < 0) | (dv > 1))
        if len(bad):
            a, b = bad[0]
            raise AsmError(f"step condition: rk({a + 1},{b}) - rk({a},{b}) not in {{0,1}}")
        bad = np.argwhere((dh < 0) | (dh > 1))
        if len(bad):
            a, b = bad[0]
            raise AsmError(f"step condition: rk({a},{b + 1}) - rk({a},{b}) not in {{0,1}}")
        return self

    def is_valid(self):
        try:
            self.check()
        except AsmError:
            return False
        return True


# --------------------------------------------------------------------------
# ASMs


@dataclass(frozen=True)
class Asm:
    """An n x n alternating sign matrix.

    Instances are immutable and hashable. Construct through `validate_asm`
    (or `Asm.from_rows`) to get validation; the raw constructor trusts its
    input.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __str__(self):
        return ";".join(",".join(str(v) for v in r) for r in self.rows)

    def __repr__(self):
        return f"Asm({str(self)!r})"

    @classmethod
    def from_rows(cls, rows) -> Asm:
        rows = [list(r) for r in rows]
        return validate_asm(len(rows), rows)

    def array(self):
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def key(self):
        """Flattened entries; the canonical sort key for ASMs."""
        return tuple(v for r in self.rows for v in r)

    @cached_property
    def rank(self) -> RankMatrix:
        return rank_matrix(self)

    @cached_property
    def ess(self) -> frozenset:
        return frozenset(essential_set(self))

    def is_permutation(self):
        return all(v >= 0 for r in self.rows for v in r)

    def to_json(self):
        return {"n": self.n, "rows": [list(r) for r in self.rows]}


def validate_asm(n, raw) -> Asm:
    """Check the three defining conditions and return an `Asm`.

    Errors name the first violated condition together with its location.
    """
    if len(raw) != n or any(len(r) != n for r in raw):
        raise AsmError(f"expected a {n}x{n} array")
    for i, r in enumerate(raw, 1):
        for j, v in enumerate(r, 1):
            if isinstance(v, bool) or int(v) != v:
                raise AsmError(f"entry ({i},{j}) = {v!r} is not an integer")
            if v not in (-1, 0, 1):
                raise AsmError(f"entry ({i},{j}) = {v} not in {{-1,0,1}}")
    for i, r in enumerate(raw, 1):
        s = 0
        for j, v in enumerate(r, 1):
            s += v
            if s not in (0, 1):
                raise AsmError(f"row prefix sum at ({i},{j}) is {s}, not in {{0,1}}")
    for j in range(n):
        s = 0
        for i in range(n):
            s += raw[i][j]
            if s not in (0, 1):
                raise AsmError(f"column prefix sum at ({i + 1},{j + 1}) is {s}, not in {{0,1}}")
    total = sum(sum(r) for r in raw)
    if total != n:
        raise AsmError(f"total entry sum is {total}, expected {n}")
    return Asm(tuple(tuple(int(v) for v in r) for r in raw))


def identity_asm(n) -> Asm:
    return Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def rank_matrix(A: Asm) -> RankMatrix:
    n = A.n
    R = np.zeros((n + 1, n + 1), dtype=np.int64)
    R[1:, 1:] = A.array().cumsum(axis=0).cumsum(axis=1)
    return RankMatrix.from_array(R)


def asm_from_rank(R: RankMatrix) -> Asm:
    """Invert `rank_matrix` by second differences."""
    R.check()
    M = R.array()
    entries = M[1:, 1:] - M[:-1, 1:] - M[1:, :-1] + M[:-1, :-1]
    return validate_asm(R.n, entries.tolist())


def transpose(A: Asm) -> Asm:
    return Asm(tuple(zip(*A.rows)))


# --------------------------------------------------------------------------
# diagrams


def inversions(A: Asm) -> set[Cell]:
    """Cells whose row prefix and column prefix sums (inclusive) both vanish."""
    n = A.n
    arr = A.array()
    row_pref = arr.cumsum(axis=1)
    col_pref = arr.cumsum(axis=0)
    return {Cell(i + 1, j + 1) for i in range(n) for j in range(n)
            if row_pref[i, j] == 0 and col_pref[i, j] == 0}


def inversions_by_rank(A: Asm) -> set[Cell]:
    R = A.rank
    n = A.n
    return {Cell(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
            if R[i, j] == R[i, j - 1] == R[i - 1, j]}


def negatives(A: Asm) -> set[Cell]:
    return {Cell(i + 1, j + 1) for i, r in enumerate(A.rows) for j, v in enumerate(r) if v == -1}


def rothe_diagram(A: Asm) -> set[Cell]:
    return {c for c in inversions(A) if A[c] == 0}


def essential_set(A: Asm) -> set[Cell]:
    inv = inversions(A)
    ess = {c for c in inv
           if Cell(c.row + 1, c.col) not in inv and Cell(c.row, c.col + 1) not in inv}
    assert ess == essential_set_by_rank(A), "essential set characterisations disagree"
    return ess


def essential_set_by_rank(A: Asm) -> set[Cell]:
    R = A.rank
    n = A.n
    out = set()
    # inversions never occur in row n or column n
    for i in range(1, n):
        for j in range(1, n):
            k = R[i, j]
            if R[i, j - 1] == k and R[i - 1, j] == k and R[i, j + 1] == k + 1 and R[i + 1, j] == k + 1:
                out.add(Cell(i, j))
    return out


# --------------------------------------------------------------------------
# permutations


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation in one-line notation, ``oneline[k-1] = w(k)``."""

    oneline: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise AsmError(f"{self.oneline} is not a permutation of 1..{len(self.oneline)}")

    @classmethod
    def parse(cls, s) -> Permutation:
        """Accept ``"31524"``, ``"3,1,5,2,4"`` or an integer sequence."""
        if isinstance(s, str):
            s = s.strip()
            parts = s.split(",") if "," in s else list(s)
            return cls(tuple(int(p) for p in parts))
        return cls(tuple(int(p) for p in s))

    @classmethod
    def identity(cls, n) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, n, i) -> Permutation:
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @property
    def n(self):
        return len(self.oneline)

    def __call__(self, i):
        return self.oneline[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (vw)(i) = v(w(i))
        return Permutation(tuple(self.oneline[k - 1] for k in other.oneline))

    def __str__(self):
        if self.n < 10:
            return "".join(map(str, self.oneline))
        return ",".join(map(str, self.oneline))

    def __repr__(self):
        return f"Permutation({str(self)!r})"

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def right_mul_simple(self, i) -> Permutation:
        """w s_i: swap the entries in positions i and i+1."""
        w = list(self.oneline)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def left_mul_simple(self, i) -> Permutation:
        """s_i w: swap the values i and i+1."""
        return Permutation(tuple(i + 1 if v == i else i if v == i + 1 else v for v in self.oneline))

    def length(self):
        return coxeter_length(self)

    def descents(self):
        return descent_set_perm(self)

    def to_asm(self) -> Asm:
        return perm_to_asm(self)

    def to_json(self):
        return {"n": self.n, "oneline": list(self.oneline)}


def coxeter_length(w: Permutation) -> int:
    return sum(1 for a, b in combinations(w.oneline, 2) if a > b)


def descent_set_perm(w: Permutation) -> set[int]:
    o = w.oneline
    return {i for i in range(1, w.n) if o[i - 1] > o[i]}


@cache
def perm_to_asm(w: Permutation) -> Asm:
    n = w.n
    return Asm(tuple(tuple(int(w(i) == j) for j in range(1, n + 1)) for i in range(1, n + 1)))


def asm_to_perm(A: Asm) -> Permutation | None:
    """The permutation with matrix A, or None when A has a -1 entry."""
    if not A.is_permutation():
        return None
    return Permutation(tuple(r.index(1) + 1 for r in A.rows))


def as_asm(x) -> Asm:
    if isinstance(x, Asm):
        return x
    if isinstance(x, Permutation):
        return perm_to_asm(x)
    raise TypeError(f"expected Asm or Permutation, got {type(x).__name__}")


# --------------------------------------------------------------------------
# bigrassmannians


class BigrassTriple(NamedTuple):
    row: int
    col: int
    rank: int
    n: int

    def check(self):
        i, j, r, n = self
        if not (i >= 1 and j >= 1):
            raise AsmError(f"bigrassmannian triple needs i, j >= 1, got ({i},{j})")
        if not (0 <= r < min(i, j)):
            raise AsmError(f"bigrassmannian triple needs 0 <= r < min(i,j), got r={r}")
        if i + j - r > n:
            raise AsmError(f"bigrassmannian triple needs i + j - r <= n, got {i + j - r} > {n}")
        return self


def bigrassmannian(t: BigrassTriple) -> Permutation:
    """[(i,j),r]_b in block form: 1_r, then 1_{i-r} and 1_{j-r} swapped, then 1_{n-i-j+r}."""
    i, j, r, n = t.check()
    w = []
    for a in range(1, n + 1):
        if a <= r:
            w.append(a)
        elif a <= i:
            w.append(j + a - r)
        elif a <= i + j - r:
            w.append(r + a - i)
        else:
            w.append(a)
    return Permutation(tuple(w))


def all_bigrass_triples(n) -> list[BigrassTriple]:
    return [BigrassTriple(i, j, r, n)
            for i in range(1, n) for j in range(1, n)
            for r in range(min(i, j)) if i + j - r <= n]


# --------------------------------------------------------------------------
# JSON


def asm_from_json(obj) -> Asm:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = obj["n"]
    return validate_asm(n, obj["rows"])


def perm_from_json(obj) -> Permutation:
    if isinstance(obj, str):
        obj = json.loads(obj)
    w = Permutation(tuple(obj["oneline"]))
    if w.n != obj["n"]:
        raise AsmError(f"oneline has length {w.n}, but n = {obj['n']}")
    return w


def cells_to_json(cells: Iterable[Cell]) -> list[list[int]]:
    return [[c.row, c.col] for c in sorted(cells)]


def parse_asm_rows(s: str) -> Asm:
    """Parse the compact ``"0,1,0;1,-1,1;0,1,0"`` form."""
    rows = [[int(v) for v in r.split(",")] for r in s.strip().split(";") if r.strip()]
    return validate_asm(len(rows), rows)


def perms_of(n) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def matrix_product_check(v: Permutation, w: Permutation) -> bool:
    """M_{vw} = M_w M_v under the (i, w(i)) placement convention."""
    Mv, Mw, Mvw = (perm_to_asm(p).array() for p in (v, w, v * w))
    return bool((Mvw == Mw @ Mv).all())
