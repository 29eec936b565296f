"""Write DOT files for a few posets into the directory given on the command line."""

import os
import sys

from asmvar.antichains import weak_poset_anti
from asmvar.export import strong_poset, strong_poset_anti, to_dot
from asmvar.golden import INTERVAL_A, INTERVAL_AT
from asmvar.weak_order import interval_below, weak_poset

out = sys.argv[1] if len(sys.argv) > 1 else "posets"
os.makedirs(out, exist_ok=True)

graphs = {
    "strong_asm3": strong_poset(3),
    "weak_asm3": weak_poset(3),
    "weak_asm4": weak_poset(4),
    "interval_a": interval_below(INTERVAL_A),
    "interval_at": interval_below(INTERVAL_AT),
    "strong_anti3": strong_poset_anti(3),
    "weak_anti3": weak_poset_anti(3),
}
for name, g in graphs.items():
    path = os.path.join(out, name + ".dot")
    with open(path, "w") as fh:
        fh.write(to_dot(g))
    print(f"{path}: {len(g.nodes)} nodes, {len(g.edges)} edges")
