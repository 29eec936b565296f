"""Grothendieck and Schubert polynomials of permutations and ASMs."""

from asmvar import Asm, Permutation, codim, groth_asm, groth_perm, perm_set, pi, schub_asm, schub_perm
from asmvar.golden import FORGETFUL, ROTHE
from asmvar.grothendieck import check_ddo, check_derivative, check_schubert_delta
from asmvar.polynomials import divided_difference, k_divided_difference

P = Permutation.parse

for w in ("213", "132", "231", "312", "321"):
    print(f"G_{w}(x) =", groth_perm(P(w), single=True), "   S_" + w + "(x,y) =", schub_perm(P(w)))

# the non-permutation ASM of size 3 has two components
B = Asm.from_rows([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
print("Perm(B) =", [str(w) for w in perm_set(B)])
print("G_B =", groth_asm(B, single=True))

# pi_i on polynomials matches pi_i on ASMs
G = groth_asm(ROTHE)
print("pi_1 G_A == G_{pi_1 A}:", k_divided_difference(G, 1) == groth_asm(pi(ROTHE, 1)))
print("check_ddo on A, i = 1..3:", [check_ddo(ROTHE, i) for i in (1, 2, 3)])
print("check_derivative(A):", check_derivative(ROTHE))

# the Schubert polynomial only sees the smallest components
A = FORGETFUL
print("Perm =", [str(w) for w in perm_set(A)], " codim =", codim(A))
print("S_A =", schub_asm(A))
print("delta_2 S_A =", divided_difference(schub_asm(A), 2), " check:", check_schubert_delta(A, 2))
print("S_{pi_2 A} =", schub_asm(pi(A, 2)))
