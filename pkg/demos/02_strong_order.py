"""Strong order: enumeration, joins and meets, Perm(A), codimension."""

from asmvar import Permutation, codim, enumerate_asms, join, leq_strong, meet, perm_set
from asmvar.golden import BIG, ROTHE
from asmvar.order import bigrass_decomposition, lower_covers
from asmvar.asm_core import rothe_diagram

P = Permutation.parse

print("|ASM(n)| for n = 1..6:", [len(enumerate_asms(n)) for n in range(1, 7)])

print("Perm(A) =", [str(w) for w in perm_set(ROTHE)], " codim =", codim(ROTHE))
print("3124 v 1423 == A:", join([P("3124"), P("1423")]) == ROTHE)
print("bigrassmannian pieces of A:", [tuple(t[:3]) for t in bigrass_decomposition(ROTHE)])
print("lower covers of A:", [str(B) for B in lower_covers(ROTHE)])

M = meet([P("2341"), P("3124")])
print("2341 ^ 3124 =", M, " Perm =", [str(w) for w in perm_set(M)])
print("A <= 4321:", leq_strong(ROTHE, P("4321")), " 4321 <= A:", leq_strong(P("4321"), ROTHE))

# codim can be smaller than the number of diagram cells
print("8x8 example: |D| =", len(rothe_diagram(BIG)), " codim =", codim(BIG))
