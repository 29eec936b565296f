"""ASMs, rank matrices, Rothe diagrams and essential sets."""

from asmvar import Asm, Permutation, validate_asm
from asmvar.asm_core import (
    AsmError,
    BigrassTriple,
    bigrassmannian,
    cells_to_json,
    essential_set,
    negatives,
    rothe_diagram,
    transpose,
)

A = Asm.from_rows([[0, 0, 1, 0], [1, 0, -1, 1], [0, 1, 0, 0], [0, 0, 1, 0]])
print("A =")
print(A.array())
print("rank matrix (index 0..n in both directions):")
print(A.rank.array())

print("D(A)   =", cells_to_json(rothe_diagram(A)))
print("N(A)   =", cells_to_json(negatives(A)))
print("ess(A) =", cells_to_json(essential_set(A)))
print("A^T    =", transpose(A))

# permutations are ASMs with no -1 entries
w = Permutation.parse("3142")
print(w, "as an ASM:", w.to_asm(), " length", w.length(), " descents", sorted(w.descents()))

# the bigrassmannian with one essential cell (3,4) of rank 2
print("[(3,4),2]_b in S_5 =", bigrassmannian(BigrassTriple(3, 4, 2, 5)))

try:
    validate_asm(3, [[1, 0, 0], [0, 1, 0], [0, 1, 0]])
except AsmError as e:
    print("rejected:", e)
