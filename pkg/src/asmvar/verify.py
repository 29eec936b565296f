"""Exhaustive theorem checks over small universes.

Each suite takes ``nmax`` and checks the universe of size
``min(nmax, cap)``, where the cap keeps the suite at desk scale.  Results come
back as `VerifyReport` values with sorted counterexample lists.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations, product
from math import factorial

from . import golden
from .antichains import (
    Antichain,
    check_ddo_anti,
    check_derivative_anti,
    enumerate_antichains,
    groth_anti,
    leq_strong_anti,
    normalize,
    pi_anti,
    strong_hasse_anti,
    sum_of_antichain_ideals,
    try_to_asm,
    weak_poset_anti,
)
from .asm_core import (
    BigrassTriple,
    Cell,
    Permutation,
    asm_from_rank,
    bigrassmannian,
    coxeter_length,
    essential_set,
    essential_set_by_rank,
    negatives,
    perm_to_asm,
    rothe_diagram,
    transpose,
)
from .grothendieck import (
    check_ddo,
    check_derivative,
    check_schubert_delta,
    check_symmetry,
    distinctness_check,
    groth_asm,
    groth_perm,
    schub_asm,
    schub_perm,
)
from .order import (
    bigrass_decomposition,
    bigrass_join,
    codim,
    enumerate_asms,
    join,
    leq_strong,
    meet,
    perm_set,
)
from .polynomials import (
    MultiPoly,
    divided_difference,
    euler,
    lowest_degree_part,
    nabla,
    negate_y,
)
from .weak_order import (
    all_chains_equal_length,
    chains,
    descents,
    every_chain_word_is_reduced,
    interval_below,
    is_equidimensional,
    maximal_weak_elements,
    min_chain_length,
    pi,
    pi_brute,
    weak_below_all,
)


@dataclass
class VerifyReport:
    theorem: str
    universe: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"theorem": self.theorem, "universe": self.universe, "checked": self.checked,
                "failures": self.failures, "passed": self.passed,
                "elapsed": round(self.elapsed, 3)}


def _run(theorem, universe, cases: Iterable, check: Callable) -> VerifyReport:
    rep = VerifyReport(theorem, universe)
    t0 = time.perf_counter()
    for case in cases:
        rep.checked += 1
        if not check(*case):
            rep.failures.append(" ".join(map(str, case)))
    rep.failures.sort()
    rep.elapsed = time.perf_counter() - t0
    return rep


def _asm_cases(nmax, cap, with_index=False):
    n = min(nmax, cap)
    for A in enumerate_asms(n):
        if with_index:
            for i in range(1, n):
                yield A, i
        else:
            yield (A,)


def _universe(nmax, cap, with_index=False):
    n = min(nmax, cap)
    return f"ASM({n}) x i in [{n - 1}]" if with_index else f"ASM({n})"


def product_formula(n) -> int:
    num = den = 1
    for k in range(n):
        num *= factorial(3 * k + 1)
        den *= factorial(n + k)
    return num // den


# --------------------------------------------------------------------------
# suites


def suite_enumeration(nmax):
    top = min(nmax, 6)
    return _run("enumeration", f"n <= {top}", [(n,) for n in range(1, top + 1)],
                lambda n: len(enumerate_asms(n)) == product_formula(n))


def suite_rank_roundtrip(nmax):
    def ok(A):
        return (asm_from_rank(A.rank) == A
                and essential_set(A) == essential_set_by_rank(A)
                and transpose(transpose(A)) == A)
    return _run("rank-roundtrip", _universe(nmax, 5), _asm_cases(nmax, 5), ok)


def suite_bigrass(nmax):
    def ok(A):
        return bigrass_join(bigrass_decomposition(A), A.n) == A
    return _run("asmbigrass", _universe(nmax, 4), _asm_cases(nmax, 4), ok)


def suite_pi_oracle(nmax):
    return _run("pi-oracle", _universe(nmax, 5, True), _asm_cases(nmax, 5, True),
                lambda A, i: pi(A, i) == pi_brute(A, i))


def suite_pi_relations(nmax):
    def ok(A, i):
        B = pi(A, i)
        good = pi(B, i) == B and leq_strong(B, A)
        for j in range(1, A.n):
            if abs(i - j) > 1:
                good &= pi(pi(A, i), j) == pi(pi(A, j), i)
            if j == i + 1:
                good &= pi(pi(pi(A, i), j), i) == pi(pi(pi(A, j), i), j)
        return good
    return _run("pi-relations", _universe(nmax, 5, True), _asm_cases(nmax, 5, True), ok)


def suite_order_preserving(nmax):
    top = min(nmax, 4)
    cases = ((A, B, i) for n in range(2, top + 1) for A in enumerate_asms(n)
             for B in enumerate_asms(n) if leq_strong(A, B) for i in range(1, n))
    return _run("pi_iorderpreserving", f"pairs A <= B in ASM(n), n <= {top}, x i", cases,
                lambda A, B, i: leq_strong(pi(A, i), pi(B, i)))


def suite_join_compat(nmax):
    top = min(nmax, 4)
    cases = ((A, B, i) for n in range(2, top + 1) for A, B in combinations(enumerate_asms(n), 2)
             for i in range(1, n))
    return _run("joindescentpart3", f"pairs in ASM(n), n <= {top}, x i", cases,
                lambda A, B, i: pi(join([A, B]), i) == join([pi(A, i), pi(B, i)]))


def _pi_perm(w: Permutation, i):
    return w.right_mul_simple(i) if w(i) > w(i + 1) else w


def suite_intersectoperator(nmax):
    def ok(A, i):
        return perm_set(pi(A, i)) == normalize(_pi_perm(w, i) for w in perm_set(A)).perms
    return _run("intersectoperator", _universe(nmax, 5, True), _asm_cases(nmax, 5, True), ok)


def suite_stepdowncodim(nmax):
    def ok(A, i):
        drop = codim(A) - codim(pi(A, i))
        c = codim(A)
        witness = any(coxeter_length(w) == c and i in w.descents() for w in perm_set(A))
        return drop in (0, 1) and (drop == 1) == witness
    return _run("stepdowncodim", _universe(nmax, 5, True), _asm_cases(nmax, 5, True), ok)


def suite_descent_transfer(nmax):
    def ok(A):
        return descents(A) == set().union(*(w.descents() for w in perm_set(A)))
    return _run("descent-of-A-implies-descent-in-perm", _universe(nmax, 5), _asm_cases(nmax, 5), ok)


def suite_chains_codim(nmax):
    return _run("codimension-saturated-chains", _universe(nmax, 5), _asm_cases(nmax, 5),
                lambda A: min_chain_length(A) == codim(A))


def suite_chains_equidim(nmax):
    def ok(A):
        return all_chains_equal_length(A) == all(is_equidimensional(B) for B in weak_below_all(A))
    return _run("saturated-chains-same-length", _universe(nmax, 5), _asm_cases(nmax, 5), ok)


def suite_reduced_words(nmax):
    return _run("reduced-words-and-saturated-chains", _universe(nmax, 4), _asm_cases(nmax, 4),
                every_chain_word_is_reduced)


def suite_ddo(nmax):
    return _run("prop-DDO", _universe(nmax, 4, True), _asm_cases(nmax, 4, True), check_ddo)


def suite_schubert_delta(nmax):
    return _run("codim-drops-iff-del-nontrivial-on-schub", _universe(nmax, 4, True),
                _asm_cases(nmax, 4, True), check_schubert_delta)


def suite_symmetry(nmax):
    return _run("same-codim-iff-symmetric-Schubert", _universe(nmax, 4, True),
                _asm_cases(nmax, 4, True), check_symmetry)


def suite_derivative(nmax):
    return _run("derivatives", _universe(nmax, 4), _asm_cases(nmax, 4), check_derivative)


def suite_distinct(nmax):
    top = min(nmax, 4)
    return _run("equal_grothendiecks_means_equal_ASMs", f"n <= {top}",
                [(n,) for n in range(1, top + 1)], distinctness_check)


def suite_lowest_degree(nmax):
    def ok(A):
        single = lowest_degree_part(groth_asm(A, single=True)) == schub_asm(A, single=True)
        w = A.is_permutation() and Permutation(tuple(r.index(1) + 1 for r in A.rows))
        double = not w or negate_y(lowest_degree_part(groth_perm(w))) == schub_perm(w)
        return single and double
    return _run("lowest-degree-part", _universe(nmax, 4), _asm_cases(nmax, 4), ok)


def _anti_top(nmax, cap=3):
    return min(nmax, cap)


def suite_intersectoperator2(nmax):
    top = _anti_top(nmax)
    cases = ((a, b, i) for n in range(2, top + 1) for a in enumerate_antichains(n)
             for b in enumerate_antichains(n) if leq_strong_anti(a, b) for i in range(1, n))
    return _run("intersectoperator2", f"pairs a <= b in anti(n), n <= {top}, x i", cases,
                lambda a, b, i: leq_strong_anti(pi_anti(a, i), pi_anti(b, i)))


def suite_pi_commutes(nmax):
    top = _anti_top(nmax)
    cases = ((a, b, i) for n in range(2, top + 1)
             for a, b in product(enumerate_antichains(n), repeat=2) for i in range(1, n))
    return _run("pi-commutes-with-intersection-antichain-varieties",
                f"pairs in anti(n), n <= {top}, x i", cases,
                lambda a, b, i: pi_anti(sum_of_antichain_ideals(a, b), i)
                == sum_of_antichain_ideals(pi_anti(a, i), pi_anti(b, i)))


def _anti_sample(nmax, seed=0, k=200):
    top = _anti_top(nmax, 4)
    out = [a for n in range(1, min(top, 3) + 1) for a in enumerate_antichains(n)]
    if top >= 4:
        out += random.Random(seed).sample(enumerate_antichains(4), k)
    return top, out


def suite_ddo_anti(nmax):
    top, sample = _anti_sample(nmax)
    cases = ((a, i) for a in sample for i in range(1, a.n))
    label = "anti(n), n <= 3" + (" and 200 sampled from anti(4)" if top >= 4 else "")
    return _run("prop-DDO2", label + " x i", cases, check_ddo_anti)


def suite_derivative_anti(nmax):
    top, sample = _anti_sample(nmax)
    label = "anti(n), n <= 3" + (" and 200 sampled from anti(4)" if top >= 4 else "")
    return _run("derivatives2", label, ((a,) for a in sample), check_derivative_anti)


# --------------------------------------------------------------------------
# worked examples


def golden_checks() -> dict[str, Callable[[], bool]]:
    g = golden
    P = Permutation.parse
    A = g.ROTHE

    def rothe():
        return (rothe_diagram(A) == {Cell(1, 1), Cell(1, 2)} and negatives(A) == {Cell(2, 3)}
                and essential_set(A) == {Cell(1, 2), Cell(2, 3)})

    def pi_chain():
        w, B = g.CHAIN_W, g.CHAIN_BOTTOM
        chain_ok = leq_strong(B, g.CHAIN_B) and leq_strong(g.CHAIN_B, g.CHAIN_A) and leq_strong(g.CHAIN_A, w)
        return chain_ok and all(pi(X, 3) == perm_to_asm(B) for X in (w, g.CHAIN_A, g.CHAIN_B, B))

    def meet_remark():
        M = meet([P("2341"), P("3124")])
        return (M == g.MEET_EXAMPLE and pi(M, 2) == perm_to_asm(P("2134"))
                and meet([pi(P("2341"), 2), pi(P("3124"), 2)]) != pi(M, 2))

    def perm_codim_chains():
        ch = list(chains(A))
        shortest = min(ch, key=len)
        return (perm_set(A) == (P("3412"), P("4123")) and codim(A) == 3
                and shortest == (3, 2, 1) and (3, 2, 1, 2) in ch)

    def maximal():
        # the printed list has one misprint; check the corrected list and the misprint's preimage
        found = list(maximal_weak_elements(4))
        return (found == sorted(g.MAXIMAL_4, key=lambda X: X.key())
                and pi(g.MAXIMAL_4_PRINTED[2], 1) == g.MAXIMAL_4_MISPRINT)

    def big():
        return len(rothe_diagram(g.BIG)) == 17 and codim(g.BIG) == 16

    def intervals():
        i1, i2 = interval_below(g.INTERVAL_A), interval_below(g.INTERVAL_AT)
        return (transpose(g.INTERVAL_A) == g.INTERVAL_AT and (len(i1.nodes), len(i1.edges)) == (10, 13)
                and len(i2.nodes) == 12)

    def anti3():
        strong = {(str(b), str(a)) for a, b in strong_hasse_anti(3)}
        want = {(str(Antichain.parse(u)), str(Antichain.parse(v))) for u, v in g.ANTI3_STRONG}
        weak = weak_poset_anti_edges(3)
        want_w = {(str(Antichain.parse(u)), i, str(Antichain.parse(v))) for u, i, v in g.ANTI3_WEAK}
        return len(enumerate_antichains(3)) == 8 and strong == want and weak == want_w

    def anti_groth():
        a = Antichain.parse(g.ANTI_EXAMPLE)
        G = groth_anti(a, single=True)
        return G == MultiPoly.parse(3, g.ANTI_EXAMPLE_GROTH) and 3 * G + nabla(G) - euler(G) == 3

    def schubert_forgets():
        x = lambda i: MultiPoly.x(4, i)
        y = lambda j: MultiPoly.y(4, j)
        expansion = ((x(1) - y(1)) * (x(1) - y(2)) * (x(3) - y(2))
                     + (x(1) - y(1)) * (x(1) - y(2)) * (x(2) - y(1))
                     + (x(1) - y(1)) * (x(2) - y(1)) * (x(3) - y(1)))
        F = g.FORGETFUL
        return (perm_set(F) == (P("2341"), P("3412")) and divided_difference(schub_asm(F), 2).is_zero()
                and pi(F, 2) == g.FORGETFUL_PI2 and schub_asm(g.FORGETFUL_PI2) == expansion)

    def misc():
        return (bigrassmannian_ok() and try_to_asm(Antichain.parse("213,132")) is None
                and try_to_asm(Antichain.parse("4123,3412")) == A
                and join([P("3124"), P("1423")]) == A)

    return {
        "rothe-diagram": rothe,
        "bigrassmannian-12534": bigrassmannian_ok,
        "pi3-chain": pi_chain,
        "meet-counterexample": meet_remark,
        "perm-set-codim-chains": perm_codim_chains,
        "maximal-weak-4": maximal,
        "codim-not-bounded-8x8": big,
        "weak-intervals": intervals,
        "anti3-posets": anti3,
        "antichain-grothendieck": anti_groth,
        "schubert-forgets-component": schubert_forgets,
        "misc": misc,
    }


def bigrassmannian_ok():
    return str(bigrassmannian(BigrassTriple(3, 4, 2, 5))) == "12534"


def weak_poset_anti_edges(n):
    g = weak_poset_anti(n)
    return {(str(g.nodes[s]), i, str(g.nodes[t])) for s, t, i in g.edges}


def suite_paper_examples(nmax):
    checks = golden_checks()
    return _run("paper-examples", f"{len(checks)} worked examples", [(k,) for k in checks],
                lambda k: checks[k]())


SUITES: dict[str, Callable[[int], VerifyReport]] = {
    "enumeration": suite_enumeration,
    "rank-roundtrip": suite_rank_roundtrip,
    "asmbigrass": suite_bigrass,
    "pi-oracle": suite_pi_oracle,
    "pi-relations": suite_pi_relations,
    "order-preserving": suite_order_preserving,
    "join-compat": suite_join_compat,
    "intersectoperator": suite_intersectoperator,
    "stepdowncodim": suite_stepdowncodim,
    "descent-transfer": suite_descent_transfer,
    "chains-codim": suite_chains_codim,
    "chains-equidim": suite_chains_equidim,
    "reduced-words": suite_reduced_words,
    "ddo": suite_ddo,
    "schubert-delta": suite_schubert_delta,
    "symmetry": suite_symmetry,
    "derivative": suite_derivative,
    "distinct": suite_distinct,
    "lowest-degree": suite_lowest_degree,
    "intersectoperator2": suite_intersectoperator2,
    "pi-commutes": suite_pi_commutes,
    "ddo-anti": suite_ddo_anti,
    "derivative-anti": suite_derivative_anti,
    "paper-examples": suite_paper_examples,
}


def run(suite: str, nmax: int) -> list[VerifyReport]:
    if suite == "all":
        return [SUITES[k](nmax) for k in sorted(SUITES)]
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))} or all")
    return [SUITES[suite](nmax)]
