"""Antichains in Bruhat order as unions of matrix Schubert varieties."""

from asmvar.antichains import (
    Antichain,
    enumerate_antichains,
    groth_anti,
    maj_anti,
    pi_anti,
    strong_hasse_anti,
    sum_of_antichain_ideals,
    transpose_anti,
    try_to_asm,
    weak_poset_anti,
)
from asmvar.polynomials import euler, nabla

a = Antichain.parse("213,132")
print("a =", a, " is an ASM variety:", try_to_asm(a) is not None)
print("4123,3412 comes from", try_to_asm(Antichain.parse("4123,3412")))

print("anti(n) sizes:", [len(enumerate_antichains(n)) for n in (1, 2, 3, 4)])
print("pi_1(a) =", pi_anti(a, 1), " pi_2(a) =", pi_anti(a, 2))
print("I_{213} + I_{132} gives", sum_of_antichain_ideals(Antichain.parse("213"), Antichain.parse("132")))

G = groth_anti(a, single=True)
k = maj_anti(transpose_anti(a))
print("G_a =", G)
print(f"({k} + nabla - E) G_a =", k * G + nabla(G) - euler(G))

print("strong covers on anti(3):")
for lo, hi in strong_hasse_anti(3):
    print(f"   {hi} > {lo}")
g = weak_poset_anti(3)
print("weak operator edges on anti(3):")
for s, t, i in g.edges:
    print(f"   {g.nodes[s]} --pi_{i}--> {g.nodes[t]}")
