"""Grothendieck and Schubert polynomials of permutations and ASMs.

Permutations are handled by the divided difference recursion down from w_0.
An ASM that is not a permutation goes through inclusion-exclusion over the
joins of subsets of Perm(A); each such join sits strictly above A, so the
recursion terminates.
"""

from __future__ import annotations

import json
import os
import threading
from itertools import combinations

from .asm_core import Permutation, as_asm, asm_to_perm, coxeter_length, transpose
from .order import BoundExceeded, codim, enumerate_asms, join, perm_set
from .polynomials import (
    MultiPoly,
    divided_difference,
    euler,
    k_divided_difference,
    nabla,
    product,
    substitute_y_zero,
    swap_x,
)
from .weak_order import maj, pi, pi_col

CACHE_FORMAT = "asmvar-polycache"
CACHE_VERSION = 1
POLY_MAX_N = 5


class PolyCache:
    """Polynomials keyed by family and canonical element string.

    Reads and writes go through a lock.  With a path, entries are appended to
    a JSON-lines file whose first line carries the format version; a file with
    a different version is ignored and rewritten.
    """

    def __init__(self, path: str | None = None):
        self._store: dict[tuple[str, str], MultiPoly] = {}
        self._lock = threading.RLock()
        self.path = path
        if path:
            self._load(path)

    def _load(self, path):
        if os.path.exists(path):
            with open(path) as fh:
                header = fh.readline()
                try:
                    meta = json.loads(header)
                except json.JSONDecodeError:
                    meta = {}
                if meta.get("format") == CACHE_FORMAT and meta.get("version") == CACHE_VERSION:
                    for line in fh:
                        if line.strip():
                            rec = json.loads(line)
                            self._store[(rec["family"], rec["key"])] = MultiPoly.from_json(rec["poly"])
                    return
        with open(path, "w") as fh:
            fh.write(json.dumps({"format": CACHE_FORMAT, "version": CACHE_VERSION}) + "\n")

    def get(self, family, key):
        with self._lock:
            return self._store.get((family, key))

    def put(self, family, key, f: MultiPoly):
        with self._lock:
            if (family, key) in self._store:
                return
            self._store[(family, key)] = f
            if self.path:
                with open(self.path, "a") as fh:
                    fh.write(json.dumps({"family": family, "key": key, "poly": f.to_json()}) + "\n")

    def __len__(self):
        return len(self._store)

    def clear(self):
        with self._lock:
            self._store.clear()


CACHE = PolyCache()


def use_cache(cache: PolyCache):
    """Swap the module-wide cache, e.g. for an on-disk one."""
    global CACHE
    CACHE = cache


def _memo(family, key, compute):
    f = CACHE.get(family, key)
    if f is None:
        f = compute()
        CACHE.put(family, key, f)
    return f


def _single(f, single):
    return substitute_y_zero(f) if single else f


# --------------------------------------------------------------------------
# permutations


def groth_top(n) -> MultiPoly:
    """Product of (x_i + y_j - x_i y_j) over i + j <= n."""
    x, y = MultiPoly.x, MultiPoly.y
    return product((x(n, i) + y(n, j) - x(n, i) * y(n, j)
                    for i in range(1, n) for j in range(1, n - i + 1)), n)


def schub_top(n) -> MultiPoly:
    """Product of (x_i - y_j) over i + j <= n."""
    x, y = MultiPoly.x, MultiPoly.y
    return product((x(n, i) - y(n, j) for i in range(1, n) for j in range(1, n - i + 1)), n)


_FAMILIES = {
    "groth": (groth_top, k_divided_difference),
    "schub": (schub_top, divided_difference),
}


def _perm_poly(family, w: Permutation) -> MultiPoly:
    top, op = _FAMILIES[family]

    def compute():
        o = w.oneline
        ascents = [i for i in range(1, w.n) if o[i - 1] < o[i]]
        if not ascents:
            return top(w.n)
        i = ascents[0]
        return op(_perm_poly(family, w.right_mul_simple(i)), i)

    return _memo(family + "-perm", str(w), compute)


def groth_perm(w: Permutation, single=False) -> MultiPoly:
    return _single(_perm_poly("groth", w), single)


def schub_perm(w: Permutation, single=False) -> MultiPoly:
    return _single(_perm_poly("schub", w), single)


def perm_poly_by_word(family, n, word) -> tuple[Permutation, MultiPoly]:
    """Apply operators to the top polynomial in the order given by ``word``.

    Each letter must be a descent of the current permutation, so the word
    read in order is a reduced word for w_0 w taken in reverse.
    """
    top, op = _FAMILIES[family]
    w, f = Permutation.longest(n), top(n)
    for i in word:
        if i not in w.descents():
            raise ValueError(f"{i} is not a descent of {w}")
        w, f = w.right_mul_simple(i), op(f, i)
    return w, f


# --------------------------------------------------------------------------
# ASMs


def _check_size(n):
    if n > POLY_MAX_N:
        raise BoundExceeded(f"polynomials are limited to n <= {POLY_MAX_N}, got {n}")


def inclusion_exclusion(perms, term) -> MultiPoly:
    """Sum over nonempty U of (-1)^(|U|-1) term(join U)."""
    perms = list(perms)
    n = perms[0].n
    total = MultiPoly.zero(n)
    for k in range(1, len(perms) + 1):
        sign = 1 if k % 2 else -1
        for U in combinations(perms, k):
            total = total + sign * term(join(U))
    return total


def groth_asm(A, single=False) -> MultiPoly:
    A = as_asm(A)
    _check_size(A.n)

    def compute():
        w = asm_to_perm(A)
        if w is not None:
            return _perm_poly("groth", w)
        return inclusion_exclusion(perm_set(A), groth_asm)

    return _single(_memo("groth-asm", str(A), compute), single)


def schub_asm(A, single=False) -> MultiPoly:
    A = as_asm(A)
    _check_size(A.n)
    c = codim(A)
    f = sum((schub_perm(w) for w in perm_set(A) if coxeter_length(w) == c), MultiPoly.zero(A.n))
    return _single(f, single)


# --------------------------------------------------------------------------
# theorem checks


def check_ddo(A, i) -> bool:
    """pi_i on the Grothendieck polynomial of A gives that of pi_i(A), double and single."""
    A = as_asm(A)
    B = pi(A, i)
    double = k_divided_difference(groth_asm(A), i) == groth_asm(B)
    single = k_divided_difference(groth_asm(A, single=True), i) == groth_asm(B, single=True)
    return double and single


def check_schubert_delta(A, i) -> bool:
    """delta_i kills the Schubert polynomial iff codim does not drop, else steps down."""
    A = as_asm(A)
    B = pi(A, i)
    ok = True
    for single in (False, True):
        d = divided_difference(schub_asm(A, single), i)
        if codim(B) == codim(A):
            ok &= d.is_zero()
        else:
            ok &= d == schub_asm(B, single)
    return ok


def check_symmetry(A, i) -> bool:
    """Same codim after pi_i, x_i <-> x_{i+1} symmetry of the single and of the double Schubert polynomial all agree."""
    A = as_asm(A)
    same = codim(pi(A, i)) == codim(A)
    s1 = schub_asm(A, single=True)
    s2 = schub_asm(A)
    return same == (swap_x(s1, i) == s1) == (swap_x(s2, i) == s2)


def derivative_sides(A) -> tuple[MultiPoly, MultiPoly]:
    A = as_asm(A)
    G = groth_asm(A, single=True)
    lhs = maj(transpose(A)) * G + nabla(G) - euler(G)
    rhs = MultiPoly.zero(A.n)
    for i in range(1, A.n):
        B = pi_col(A, i)
        if B != A:
            rhs = rhs + i * groth_asm(B, single=True)
    return lhs, rhs


def check_derivative(A) -> bool:
    lhs, rhs = derivative_sides(A)
    return lhs == rhs


def distinctness_check(n, max_n=4) -> bool:
    """Single Grothendieck polynomials of ASM(n) are pairwise distinct."""
    polys = [groth_asm(A, single=True) for A in enumerate_asms(n, max_n)]
    return len(set(polys)) == len(polys)
