"""The operators pi_i, descents, saturated chains and weak order intervals."""

from asmvar import Permutation, pi, pi_brute, pi_col
from asmvar.golden import CHAIN_A, CHAIN_B, FORGETFUL, INTERVAL_A, INTERVAL_AT, ROTHE
from asmvar.weak_order import (
    chains,
    descents,
    interval_below,
    is_equidimensional,
    maj,
    maximal_weak_elements,
    min_chain_length,
)

P = Permutation.parse

# pi_3 collapses a whole strong-order chain onto one permutation
for X in (P("31524"), CHAIN_A, CHAIN_B, P("31254")):
    print("pi_3 ->", pi(X, 3))

# the closed formula agrees with the definition as a minimum over a row
print("pi_2(A) == pi_brute(A, 2):", pi(ROTHE, 2) == pi_brute(ROTHE, 2))
print("column version pi_1^C(A):", pi_col(ROTHE, 1))

print("des(A) =", sorted(descents(ROTHE)), " maj(A) =", maj(ROTHE))
words = sorted(chains(ROTHE), key=lambda w: (len(w), w))
print("chain words of A:", words)
print("shortest chain has length", min_chain_length(ROTHE), "= codim")

for X in (INTERVAL_A, INTERVAL_AT):
    g = interval_below(X)
    print(f"interval below {X}: {len(g.nodes)} nodes, {len(g.edges)} edges")

B = pi(INTERVAL_AT, 1)
print("equidimensional:", is_equidimensional(INTERVAL_AT), "->", is_equidimensional(B), "after pi_1")
print("pi_2 of the two-component example:", pi(FORGETFUL, 2))

print("maximal elements of the weak order on ASM(4):")
for X in maximal_weak_elements(4):
    print("  ", X)
