import json
import random
import threading

import pytest
import sympy

from asmvar import golden, grothendieck
from asmvar.asm_core import Asm, Permutation, identity_asm, perm_to_asm, perms_of
from asmvar.grothendieck import (
    CACHE_FORMAT,
    CACHE_VERSION,
    PolyCache,
    check_ddo,
    check_derivative,
    check_schubert_delta,
    check_symmetry,
    derivative_sides,
    distinctness_check,
    groth_asm,
    groth_perm,
    groth_top,
    perm_poly_by_word,
    schub_asm,
    schub_perm,
    schub_top,
)
from asmvar.order import BoundExceeded, codim, enumerate_asms, join, perm_set
from asmvar.polynomials import (
    MultiPoly,
    lowest_degree_part,
    negate_y,
    specialize_x_equal,
    substitute_y_zero,
)
from asmvar.weak_order import pi

P = Permutation.parse
ASM3 = list(enumerate_asms(3))
ASM4 = list(enumerate_asms(4))


def poly(n, expr: str) -> MultiPoly:
    gens = sympy.symbols(f"x1:{n + 1}") + sympy.symbols(f"y1:{n + 1}")
    p = sympy.Poly(sympy.expand(sympy.sympify(expr)), *gens)
    return MultiPoly(n, {e: int(c) for e, c in p.terms()})


def test_top_polynomials():
    assert groth_top(1) == MultiPoly.const(1) == schub_top(1)
    assert groth_top(2) == poly(2, "x1 + y1 - x1*y1")
    assert schub_top(2) == poly(2, "x1 - y1")
    assert schub_top(3) == poly(3, "(x1-y1)*(x1-y2)*(x2-y1)")
    assert groth_perm(Permutation.longest(4)) == groth_top(4)


def test_small_permutations():
    for n in (1, 2, 3, 4):
        assert groth_perm(Permutation.identity(n)) == MultiPoly.const(n)
        assert schub_perm(Permutation.identity(n)) == MultiPoly.const(n)
    single = {"213": "x1", "132": "x1 + x2 - x1*x2", "231": "x1*x2", "312": "x1**2", "321": "x1**2*x2"}
    for w, g in single.items():
        assert groth_perm(P(w), single=True) == poly(3, g)
    assert schub_perm(P("132")) == poly(3, "x1 + x2 - y1 - y2")
    assert schub_perm(P("2341")) == poly(4, "(x1-y1)*(x2-y1)*(x3-y1)")


def test_antichain_example_alternating_sum():
    G = lambda w: groth_perm(P(w), single=True)
    total = G("213") + G("132") - G("231") - G("312") + G("321")
    assert total == MultiPoly.parse(3, golden.ANTI_EXAMPLE_GROTH)


def test_groth_asm_non_permutation_in_asm3():
    B = Asm.from_rows([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
    assert perm_set(B) == (P("231"), P("312"))
    assert join([P("231"), P("312")]) == perm_to_asm(P("321"))
    assert groth_asm(B) == groth_perm(P("231")) + groth_perm(P("312")) - groth_perm(P("321"))


def test_groth_asm_delegates_for_permutations():
    for w in perms_of(4):
        assert groth_asm(w) == groth_perm(w)
        assert schub_asm(w) == schub_perm(w)


def test_forgetful_example():
    A, B = golden.FORGETFUL, golden.FORGETFUL_PI2
    assert perm_set(A) == (P("2341"), P("3412"))
    assert pi(A, 2) == B
    assert schub_asm(A) == schub_perm(P("2341"))
    assert schub_asm(B) == poly(4, "(x1-y1)*(x1-y2)*(x3-y2) + (x1-y1)*(x1-y2)*(x2-y1)"
                                   " + (x1-y1)*(x2-y1)*(x3-y1)")
    assert schub_asm(B) == schub_perm(P("3142")) + schub_perm(P("2341"))
    assert check_schubert_delta(A, 2) and check_symmetry(A, 2)
    assert codim(A) == codim(B) == 3
    assert schub_asm(identity_asm(4)) == MultiPoly.const(4)


def test_reduced_word_independence():
    rng = random.Random(11)
    for w in perms_of(4):
        for family, get in (("groth", groth_perm), ("schub", schub_perm)):
            # random walk down from w_0 through descents until reaching w
            target = w
            for _ in range(3):
                cur, word = Permutation.longest(4), []
                while cur != target:
                    options = [i for i in cur.descents()
                               if _above(cur.right_mul_simple(i), target)]
                    i = rng.choice(options)
                    word.append(i)
                    cur = cur.right_mul_simple(i)
                end, f = perm_poly_by_word(family, 4, word)
                assert end == target and f == get(target)


def _above(u, w):
    # w lies below u in right weak order: u = w v with lengths adding
    return (w.inverse() * u).length() == u.length() - w.length()


def test_perm_poly_by_word_rejects_ascent():
    with pytest.raises(ValueError):
        perm_poly_by_word("groth", 3, [1, 1])


def test_schubert_is_lowest_part():
    for w in perms_of(4):
        G = groth_perm(w)
        assert schub_perm(w, single=True) == lowest_degree_part(substitute_y_zero(G))
        assert schub_perm(w) == negate_y(lowest_degree_part(G))
    for A in ASM4:
        assert lowest_degree_part(groth_asm(A, single=True)) == schub_asm(A, single=True)


def test_untwisted_coordinate_remark():
    for w in perms_of(4):
        assert specialize_x_equal(groth_perm(w)) == specialize_x_equal(groth_perm(w.inverse()))


def test_ddo_asm3_and_asm4():
    for A in ASM3 + ASM4:
        for i in range(1, A.n):
            assert check_ddo(A, i)


def test_schubert_checks_asm4():
    for A in ASM4:
        for i in (1, 2, 3):
            assert check_schubert_delta(A, i)
            assert check_symmetry(A, i)


def test_derivative():
    lhs, rhs = derivative_sides(identity_asm(3))
    assert lhs.is_zero() and rhs.is_zero()
    assert check_derivative(Permutation.longest(3))
    for A in ASM4:
        assert check_derivative(A)


def test_distinctness():
    assert distinctness_check(1)
    polys = {groth_asm(A, single=True) for A in ASM3}
    assert len(polys) == 7
    assert len({groth_asm(A, single=True) for A in ASM4}) == 42
    assert distinctness_check(4)
    with pytest.raises(BoundExceeded):
        distinctness_check(5)


def test_size_bound():
    with pytest.raises(BoundExceeded):
        groth_asm(identity_asm(6))


def test_inclusion_exclusion_terms_go_up():
    from itertools import combinations

    from asmvar.order import leq_strong
    for A in ASM4:
        perms = perm_set(A)
        if len(perms) > 1:
            for k in range(1, len(perms) + 1):
                for U in combinations(perms, k):
                    J = join(U)
                    assert leq_strong(A, J) and J != A


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    old = grothendieck.CACHE
    try:
        grothendieck.use_cache(PolyCache(str(path)))
        f = groth_asm(golden.ROTHE)
        n = len(grothendieck.CACHE)
        assert n > 0
        lines = path.read_text().splitlines()
        assert json.loads(lines[0]) == {"format": CACHE_FORMAT, "version": CACHE_VERSION}
        assert len(lines) == n + 1
        fresh = PolyCache(str(path))
        assert len(fresh) == n
        grothendieck.use_cache(fresh)
        assert groth_asm(golden.ROTHE) == f
        assert len(path.read_text().splitlines()) == n + 1
    finally:
        grothendieck.use_cache(old)


def test_cache_version_mismatch_rewrites(tmp_path):
    path = tmp_path / "cache.jsonl"
    path.write_text(json.dumps({"format": CACHE_FORMAT, "version": 0}) + "\n"
                    + json.dumps({"family": "x", "key": "y", "poly": {"n": 1, "terms": []}}) + "\n")
    c = PolyCache(str(path))
    assert len(c) == 0
    assert json.loads(path.read_text().splitlines()[0])["version"] == CACHE_VERSION


def test_cache_concurrent_writes(tmp_path):
    c = PolyCache(str(tmp_path / "c.jsonl"))
    f = MultiPoly.x(2, 1)

    def work(k):
        for j in range(50):
            c.put("fam", f"{k}-{j}", f)
            assert c.get("fam", f"{k}-{j}") == f

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(c) == 200
    assert len(PolyCache(c.path)) == 200


def test_cache_spot_check_matches_recompute():
    grothendieck.CACHE.clear()
    first = [groth_asm(A) for A in ASM3]
    grothendieck.CACHE.clear()
    assert [groth_asm(A) for A in ASM3] == first
