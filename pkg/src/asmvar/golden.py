"""Worked examples used by the golden tests and `asmvar verify paper-examples`."""

from .asm_core import Asm, Permutation

P = Permutation.parse


def _asm(rows) -> Asm:
    return Asm.from_rows(rows)


# 4x4 ASM with D = {(1,1),(1,2)}, N = {(2,3)}, Perm = {4123, 3412}
ROTHE = _asm([[0, 0, 1, 0], [1, 0, -1, 1], [0, 1, 0, 0], [0, 0, 1, 0]])

# the chain 31524 > A > B > 31254, all collapsed by pi_3
CHAIN_W = P("31524")
CHAIN_A = _asm([[0, 0, 1, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 1, 0, -1, 1], [0, 0, 0, 1, 0]])
CHAIN_B = _asm([[0, 0, 1, 0, 0], [1, 0, 0, 0, 0], [0, 1, -1, 1, 0], [0, 0, 1, -1, 1], [0, 0, 0, 1, 0]])
CHAIN_BOTTOM = P("31254")

# meet(2341, 3124); pi_2 of it is 2134
MEET_EXAMPLE = _asm([[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])

# 8x8 ASM with |D| = 17 but codim 16
BIG = _asm([
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, 0, 1],
    [1, 0, 0, -1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
])

# weak order interval pictures: 10 nodes / 13 edges and its transpose with 12 nodes
INTERVAL_A = _asm([[0, 0, 1, 0], [0, 1, -1, 1], [1, 0, 0, 0], [0, 0, 1, 0]])
INTERVAL_AT = _asm([[0, 0, 1, 0], [0, 1, 0, 0], [1, -1, 0, 1], [0, 1, 0, 0]])

# Perm = {2341, 3412}: the Schubert polynomial only sees 2341
FORGETFUL = _asm([[0, 1, 0, 0], [0, 0, 1, 0], [1, -1, 0, 1], [0, 1, 0, 0]])
FORGETFUL_PI2 = _asm([[0, 1, 0, 0], [1, -1, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]])

# as printed; the second entry is pi_1 of the third, so it is not maximal
MAXIMAL_4_PRINTED = [
    _asm([[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, -1, 1], [0, 0, 1, 0]]),
    _asm([[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, -1, 1], [0, 0, 1, 0]]),
    _asm([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, -1, 1], [0, 0, 1, 0]]),
    _asm([[0, 0, 1, 0], [0, 1, 0, 0], [1, -1, 0, 1], [0, 1, 0, 0]]),
    _asm([[0, 1, 0, 0], [1, -1, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]),
    _asm([[0, 0, 1, 0], [0, 1, -1, 1], [1, -1, 1, 0], [0, 1, 0, 0]]),
    _asm([[0, 0, 0, 1], [0, 1, 0, 0], [1, -1, 1, 0], [0, 1, 0, 0]]),
    _asm([[0, 0, 1, 0], [0, 1, -1, 1], [0, 0, 1, 0], [1, 0, 0, 0]]),
    P("4321").to_asm(),
]
MAXIMAL_4_MISPRINT = MAXIMAL_4_PRINTED[1]
# has an essential cell in every row 1..3, hence maximal, but is not printed
MAXIMAL_4_MISSING = _asm([[0, 0, 1, 0], [1, 0, -1, 1], [0, 0, 1, 0], [0, 1, 0, 0]])
MAXIMAL_4 = [A for A in MAXIMAL_4_PRINTED if A != MAXIMAL_4_MISPRINT] + [MAXIMAL_4_MISSING]

# strong order on anti(3): (upper, lower) cover pairs
ANTI3_STRONG = [
    ("321", "231"), ("321", "312"),
    ("231", "231,312"), ("312", "231,312"),
    ("231,312", "213"), ("231,312", "132"),
    ("213", "213,132"), ("132", "213,132"),
    ("213,132", "123"),
]

# weak order operator edges on anti(3): (source, label, target)
ANTI3_WEAK = [
    ("321", 1, "231"), ("321", 2, "312"),
    ("231", 2, "213"),
    ("231,312", 2, "213"), ("231,312", 1, "132"),
    ("312", 1, "132"),
    ("213", 1, "123"), ("132", 2, "123"),
    ("213,132", 1, "123"), ("213,132", 2, "123"),
]

ANTI_EXAMPLE = "213,132"
ANTI_EXAMPLE_GROTH = "2*x1 + x2 - 2*x1*x2 - x1^2 + x1^2*x2"
