"""Sparse integer polynomials in x_1..x_n, y_1..y_n.

A term is an exponent vector of width 2n (x exponents first, then y) mapped
to a nonzero Python int.  Values are immutable; every operation returns a new
polynomial in canonical form.
"""

from __future__ import annotations

import re
from collections import defaultdict
from collections.abc import Iterable, Mapping


class DivisionError(ArithmeticError):
    """An exact division by x_i - x_{i+1} left a remainder."""


class MultiPoly:
    __slots__ = ("_hash", "n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != 2 * n:
                raise ValueError(f"exponent vector {e} has width {len(e)}, expected {2 * n}")
            if c:
                clean[e] = int(c)
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def const(cls, n, c=1) -> MultiPoly:
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def zero(cls, n) -> MultiPoly:
        return cls(n)

    @classmethod
    def x(cls, n, i) -> MultiPoly:
        if not 1 <= i <= n:
            raise ValueError(f"x{i} is not a variable when n = {n}")
        return cls._var(n, i - 1)

    @classmethod
    def y(cls, n, j) -> MultiPoly:
        if not 1 <= j <= n:
            raise ValueError(f"y{j} is not a variable when n = {n}")
        return cls._var(n, n + j - 1)

    @classmethod
    def _var(cls, n, slot):
        if not 0 <= slot < 2 * n:
            raise ValueError("variable index out of range")
        e = [0] * (2 * n)
        e[slot] = 1
        return cls(n, {tuple(e): 1})

    # basic protocol

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.n}, {self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def is_zero(self):
        return not self.terms

    # arithmetic

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly.const(self.n, other)
        if not isinstance(other, MultiPoly):
            raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"size mismatch: n={self.n} vs n={other.n}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        other = self._coerce(other)
        out: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    # degrees

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    # text and JSON

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms by total degree, then reverse lexicographic on exponent vectors."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0])))

    def _monomial(self, e) -> str:
        names = [f"x{k}" for k in range(1, self.n + 1)] + [f"y{k}" for k in range(1, self.n + 1)]
        parts = []
        for name, a in zip(names, e):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = self._monomial(e)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    @classmethod
    def parse(cls, n, text: str) -> MultiPoly:
        """Read back the output of `to_text` (sums of products, no brackets)."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial text")
        out = MultiPoly(n)
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
            term = MultiPoly.const(n, -1 if sign == "-" else 1)
            for factor in body.split("*"):
                m = re.fullmatch(r"([xy])(\d+)(?:\^(\d+))?", factor)
                if m:
                    var = (cls.x if m[1] == "x" else cls.y)(n, int(m[2]))
                    term = term * var ** int(m[3] or 1)
                elif factor.isdigit():
                    term = term * int(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r}")
            out = out + term
        return out

    def to_json(self):
        return {"n": self.n,
                "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> MultiPoly:
        return cls(obj["n"], {tuple(t["exp"]): t["coef"] for t in obj["terms"]})


def scale(f: MultiPoly, c: int) -> MultiPoly:
    return MultiPoly(f.n, {e: c * v for e, v in f.terms.items()})


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def product(factors: Iterable[MultiPoly], n) -> MultiPoly:
    out = MultiPoly.const(n)
    for f in factors:
        out = out * f
    return out


def _check_i(f, i):
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"index {i} outside [1, {f.n - 1}]")


def swap_x(f: MultiPoly, i: int) -> MultiPoly:
    """s_i acting on x variables; y is fixed."""
    _check_i(f, i)
    out = {}
    for e, c in f.terms.items():
        e = list(e)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = c
    return MultiPoly(f.n, out)


def divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """delta_i f = (f - s_i f) / (x_i - x_{i+1}), computed term by term.

    For a > b, (u^a v^b - u^b v^a)/(u - v) = (uv)^b * sum_k u^(a-b-1-k) v^k.
    """
    _check_i(f, i)
    p, q = i - 1, i
    out: dict = defaultdict(int)
    for e, c in f.terms.items():
        a, b = e[p], e[q]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, d = min(a, b), abs(a - b)
        for k in range(d):
            m = list(e)
            m[p] = lo + d - 1 - k
            m[q] = lo + k
            out[tuple(m)] += sign * c
    result = MultiPoly(f.n, out)
    if result * (MultiPoly.x(f.n, i) - MultiPoly.x(f.n, i + 1)) != f - swap_x(f, i):
        raise DivisionError(f"division by x{i} - x{i + 1} left a remainder")
    return result


def k_divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """The K-theoretic operator pi_i f = delta_i((1 - x_{i+1}) f)."""
    _check_i(f, i)
    return divided_difference(f - MultiPoly.x(f.n, i + 1) * f, i)


def nabla(f: MultiPoly) -> MultiPoly:
    """Sum of the partial derivatives in x_1..x_n."""
    out: dict = defaultdict(int)
    for e, c in f.terms.items():
        for k in range(f.n):
            if e[k]:
                m = list(e)
                m[k] -= 1
                out[tuple(m)] += c * e[k]
    return MultiPoly(f.n, out)


def euler(f: MultiPoly) -> MultiPoly:
    """Euler operator in x: each term times its x-degree."""
    return MultiPoly(f.n, {e: c * sum(e[:f.n]) for e, c in f.terms.items()})


def substitute_y_zero(f: MultiPoly) -> MultiPoly:
    return MultiPoly(f.n, {e: c for e, c in f.terms.items() if not any(e[f.n:])})


def negate_y(f: MultiPoly) -> MultiPoly:
    return MultiPoly(f.n, {e: c * (-1) ** sum(e[f.n:]) for e, c in f.terms.items()})


def lowest_degree_part(f: MultiPoly) -> MultiPoly:
    if not f.terms:
        return f
    d = min(sum(e) for e in f.terms)
    return MultiPoly(f.n, {e: c for e, c in f.terms.items() if sum(e) == d})


def specialize_x_equal(f: MultiPoly) -> dict[int, int]:
    """Set every x_i to t and every y_j to 0; returns {degree: coefficient}."""
    out: dict = defaultdict(int)
    for e, c in substitute_y_zero(f).terms.items():
        out[sum(e[:f.n])] += c
    return {d: c for d, c in sorted(out.items()) if c}
