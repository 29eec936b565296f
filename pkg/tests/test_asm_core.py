import json

import numpy as np
import pytest
from oracles import corner_sums

from asmvar.asm_core import (
    Asm,
    AsmError,
    BigrassTriple,
    Cell,
    Permutation,
    RankMatrix,
    all_bigrass_triples,
    asm_from_json,
    asm_from_rank,
    asm_to_perm,
    bigrassmannian,
    coxeter_length,
    descent_set_perm,
    essential_set,
    essential_set_by_rank,
    identity_asm,
    inversions,
    inversions_by_rank,
    matrix_product_check,
    negatives,
    parse_asm_rows,
    perm_from_json,
    perm_to_asm,
    perms_of,
    rank_matrix,
    rothe_diagram,
    transpose,
    validate_asm,
)
from asmvar.order import enumerate_asms

ROTHE = [[0, 0, 1, 0], [1, 0, -1, 1], [0, 1, 0, 0], [0, 0, 1, 0]]
FIG1 = [[0, 0, 1, 0], [0, 1, -1, 1], [1, 0, 0, 0], [0, 0, 1, 0]]
FIG2 = [[0, 0, 1, 0], [0, 1, 0, 0], [1, -1, 0, 1], [0, 1, 0, 0]]
P = Permutation.parse


@pytest.mark.parametrize("rows", [
    np.eye(3, dtype=int).tolist(),
    [[0, 1, 0], [1, -1, 1], [0, 1, 0]],
    ROTHE,
])
def test_validate_accepts(rows):
    A = validate_asm(len(rows), rows)
    assert [list(r) for r in A.rows] == rows


@pytest.mark.parametrize("rows, fragment", [
    ([[2, 0], [0, 1]], "entry"),
    ([[1, 1], [0, -1]], "prefix"),
    ([[1, 0], [0, 0]], "total"),
    ([[0, 1, 0], [1, 0, 0], [0, 0, 0]], "total"),
    ([[1, 0], [1, 0]], "column prefix"),
    ([[1, 0, 0], [0, 1, 0]], "3x3"),
])
def test_validate_rejects_with_location(rows, fragment):
    with pytest.raises(AsmError, match=fragment):
        validate_asm(3 if len(rows) == 2 and len(rows[0]) == 3 else len(rows), rows)


def test_validate_reports_location():
    with pytest.raises(AsmError, match=r"\(2,2\)"):
        validate_asm(2, [[0, 1], [1, 1]])


def test_rank_of_identity():
    R = rank_matrix(identity_asm(4))
    assert all(R[i, j] == min(i, j) for i in range(5) for j in range(5))


def test_rank_of_21():
    assert rank_matrix(P("21").to_asm()).values == ((0, 0, 0), (0, 0, 1), (0, 1, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rank_roundtrip_and_corner_sums(n):
    for A in enumerate_asms(n):
        assert asm_from_rank(rank_matrix(A)) == A
        assert [list(r) for r in A.rank.values] == corner_sums(A.rows)


def test_asm_from_rank_identity_and_example():
    vals = [[min(i, j) for j in range(5)] for i in range(5)]
    assert asm_from_rank(RankMatrix.from_array(vals)) == identity_asm(4)
    A = Asm.from_rows(ROTHE)
    assert asm_from_rank(A.rank) == A


@pytest.mark.parametrize("bad, fragment", [
    ([[0, 0], [0, 0]], "boundary"),
    ([[0, 0, 0, 0], [0, 1, 1, 1], [0, 0, 1, 2], [0, 1, 2, 3]], "step"),
])
def test_asm_from_rank_rejects(bad, fragment):
    with pytest.raises(AsmError, match=fragment):
        asm_from_rank(RankMatrix.from_array(bad))


def test_perm_to_asm_31524():
    A = perm_to_asm(P("31524"))
    ones = {(i, j) for i in range(1, 6) for j in range(1, 6) if A[i, j] == 1}
    assert ones == {(1, 3), (2, 1), (3, 5), (4, 2), (5, 4)}
    assert asm_to_perm(A) == P("31524")


def test_perm_asm_identity_and_non_permutation():
    assert perm_to_asm(Permutation.identity(4)) == identity_asm(4)
    assert asm_to_perm(identity_asm(4)) == Permutation.identity(4)
    assert asm_to_perm(Asm.from_rows([[0, 1, 0], [1, -1, 1], [0, 1, 0]])) is None


def test_transpose():
    assert transpose(identity_asm(3)) == identity_asm(3)
    assert transpose(Asm.from_rows(FIG1)) == Asm.from_rows(FIG2)
    for A in enumerate_asms(4):
        T = transpose(A)
        assert transpose(T) == A
        assert inversions(T) == {Cell(j, i) for i, j in inversions(A)}


def test_rothe_example():
    A = Asm.from_rows(ROTHE)
    assert rothe_diagram(A) == {Cell(1, 1), Cell(1, 2)}
    assert negatives(A) == {Cell(2, 3)}
    assert essential_set(A) == {Cell(1, 2), Cell(2, 3)}


def test_identity_sets_empty():
    I = identity_asm(5)
    assert inversions(I) == negatives(I) == rothe_diagram(I) == essential_set(I) == set()


def test_diagram_size_is_length_on_s4():
    for w in perms_of(4):
        assert len(rothe_diagram(perm_to_asm(w))) == coxeter_length(w)


def test_inversions_split_and_rank_characterisations_agree():
    for n in range(1, 6):
        for A in enumerate_asms(n):
            inv, N, D = inversions(A), negatives(A), rothe_diagram(A)
            assert N | D == inv and not N & D
            assert inversions_by_rank(A) == inv
            assert essential_set_by_rank(A) == essential_set(A)


def test_essential_row_3_of_example_chain():
    A = Asm.from_rows([[0, 0, 1, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 1, 0],
                       [0, 1, 0, -1, 1], [0, 0, 0, 1, 0]])
    assert any(c.row == 3 for c in A.ess)


def test_bigrassmannian_examples():
    assert bigrassmannian(BigrassTriple(3, 4, 2, 5)) == P("12534")
    assert bigrassmannian(BigrassTriple(1, 1, 0, 2)) == P("21")


def test_bigrassmannian_all_n4():
    triples = all_bigrass_triples(4)
    assert len(triples) == 10  # one per bigrassmannian in S_4 besides the identity
    for t in triples:
        A = perm_to_asm(bigrassmannian(t))
        assert essential_set(A) == {Cell(t.row, t.col)}
        assert A.rank[t.row, t.col] == t.rank


@pytest.mark.parametrize("t", [(0, 1, 0, 3), (2, 2, 2, 4), (3, 3, 0, 5)])
def test_bigrass_triple_invalid(t):
    with pytest.raises(AsmError):
        bigrassmannian(BigrassTriple(*t))


def test_lengths_and_descents():
    assert coxeter_length(P("4123")) == 3
    assert coxeter_length(P("3412")) == 4
    assert coxeter_length(Permutation.identity(6)) == 0
    for n in range(1, 7):
        assert coxeter_length(Permutation.longest(n)) == n * (n - 1) // 2
    assert descent_set_perm(P("31524")) == {1, 3}


def test_matrix_of_product():
    S = perms_of(4)
    assert all(matrix_product_check(v, w) for v in S for w in S)


def test_multiplication_convention():
    v, w = P("231"), P("213")
    assert (v * w).oneline == tuple(v(w(i)) for i in (1, 2, 3))
    assert P("31524").right_mul_simple(3) == P("31254")
    assert P("231").left_mul_simple(1) == P("132")


def test_json_roundtrip():
    A = Asm.from_rows(ROTHE)
    assert asm_from_json(json.dumps(A.to_json())) == A
    w = P("31524")
    assert perm_from_json(w.to_json()) == w
    with pytest.raises(AsmError):
        perm_from_json({"n": 4, "oneline": [1, 2, 3]})


def test_parsing():
    assert parse_asm_rows("0,1,0;1,-1,1;0,1,0") == Asm.from_rows([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
    assert P("3,1,5,2,4") == P("31524") == P([3, 1, 5, 2, 4])
    with pytest.raises(AsmError):
        P("112")
