"""Alternating sign matrices, weak order operators, and their Grothendieck polynomials."""

from .antichains import Antichain, groth_anti, normalize, pi_anti
from .asm_core import (
    Asm,
    AsmError,
    BigrassTriple,
    Cell,
    Permutation,
    RankMatrix,
    asm_from_rank,
    asm_to_perm,
    bigrassmannian,
    coxeter_length,
    essential_set,
    inversions,
    negatives,
    perm_to_asm,
    rank_matrix,
    rothe_diagram,
    transpose,
    validate_asm,
)
from .grothendieck import groth_asm, groth_perm, schub_asm, schub_perm
from .order import (
    AsmSet,
    BoundExceeded,
    codim,
    enumerate_asms,
    join,
    leq_strong,
    lower_covers,
    meet,
    perm_set,
    upper_covers,
)
from .polynomials import MultiPoly
from .weak_order import chains, descents, maj, min_chain_length, pi, pi_brute, pi_col

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "Asm",
    "AsmError",
    "AsmSet",
    "BigrassTriple",
    "BoundExceeded",
    "Cell",
    "MultiPoly",
    "Permutation",
    "RankMatrix",
    "asm_from_rank",
    "asm_to_perm",
    "bigrassmannian",
    "chains",
    "codim",
    "coxeter_length",
    "descents",
    "enumerate_asms",
    "essential_set",
    "groth_anti",
    "groth_asm",
    "groth_perm",
    "inversions",
    "join",
    "leq_strong",
    "lower_covers",
    "maj",
    "meet",
    "min_chain_length",
    "negatives",
    "normalize",
    "perm_set",
    "perm_to_asm",
    "pi",
    "pi_anti",
    "pi_brute",
    "pi_col",
    "rank_matrix",
    "rothe_diagram",
    "schub_asm",
    "schub_perm",
    "transpose",
    "upper_covers",
    "validate_asm",
]
