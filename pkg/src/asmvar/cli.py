"""Command line interface: ``asmvar {enumerate,query,pi,poly,poset,verify}``.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 feasibility bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import grothendieck
from .antichains import (
    Antichain,
    antichain_from_json,
    codim_anti,
    descents_anti,
    enumerate_antichains,
    from_asm,
    groth_anti,
    maj_anti,
    pi_anti,
    pi_col_anti,
    weak_poset_anti,
)
from .asm_core import (
    Asm,
    AsmError,
    Permutation,
    asm_from_json,
    asm_to_perm,
    bigrassmannian,
    cells_to_json,
    negatives,
    parse_asm_rows,
    perm_from_json,
    perm_to_asm,
    rothe_diagram,
)
from .export import dump, strong_interval_below, strong_poset, strong_poset_anti
from .grothendieck import PolyCache, groth_asm, schub_asm, schub_perm
from .order import (
    DEFAULT_MAX_N,
    BoundExceeded,
    bigrass_decomposition,
    codim,
    enumerate_asms,
)
from .polynomials import MultiPoly, substitute_y_zero
from .verify import run as run_verify
from .weak_order import apply_word, descents, interval_below, maj, weak_poset

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class InputError(ValueError):
    pass


def parse_input(text: str):
    """An Asm, Permutation or Antichain from JSON, a file, or compact notation."""
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    text = text.strip()
    if not text:
        raise InputError("empty input")
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError:
            return Antichain.parse(text)
        if not isinstance(obj, dict) or "n" not in obj:
            raise InputError("JSON input needs an 'n' field")
        if "rows" in obj:
            return asm_from_json(obj)
        if "oneline" in obj:
            return perm_from_json(obj)
        if "perms" in obj:
            return antichain_from_json(obj)
        raise InputError("JSON input needs one of 'rows', 'oneline', 'perms'")
    if ";" in text:
        return parse_asm_rows(text)
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise InputError(f"cannot read {text!r} as a permutation: {e}") from None


def _as_asm(x) -> Asm:
    if isinstance(x, Antichain):
        raise InputError("this query needs an ASM or permutation, not an antichain")
    return perm_to_asm(x) if isinstance(x, Permutation) else x


def _asm_json(A: Asm) -> dict:
    out = A.to_json()
    w = asm_to_perm(A)
    if w is not None:
        out["perm"] = list(w.oneline)
    return out


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


# --------------------------------------------------------------------------
# commands


def cmd_enumerate(args, out):
    if args.kind == "asm":
        items = [A.to_json() for A in enumerate_asms(args.n, args.nmax)]
    else:
        items = [a.to_json() for a in enumerate_antichains(args.n, min(args.nmax, 4))]
    for obj in items:
        _emit(obj, out)
    _emit({"count": len(items)}, out)


def _ideal_generators(A: Asm):
    R = A.rank
    return [{"cell": [i, j], "minor_size": R[i, j] + 1, "rows": [1, i], "cols": [1, j]}
            for i, j in sorted(A.ess)]


def cmd_query(args, out):
    x = parse_input(args.input)
    what = args.what
    if isinstance(x, Antichain):
        table = {"perm-set": lambda: x.to_json(), "codim": lambda: codim_anti(x),
                 "descents": lambda: sorted(descents_anti(x)), "maj": lambda: maj_anti(x)}
        if what not in table:
            raise InputError(f"query {what!r} is not defined for antichains")
        _emit(table[what](), out)
        return
    A = _as_asm(x)
    table = {
        "rank": lambda: [list(r) for r in A.rank.values],
        "diagram": lambda: {"D": cells_to_json(rothe_diagram(A)), "N": cells_to_json(negatives(A))},
        "essential": lambda: cells_to_json(A.ess),
        "perm-set": lambda: from_asm(A).to_json(),
        "codim": lambda: codim(A),
        "descents": lambda: sorted(descents(A)),
        "maj": lambda: maj(A),
        "bigrass": lambda: [{"row": t.row, "col": t.col, "rank": t.rank,
                             "perm": list(bigrassmannian(t).oneline)}
                            for t in bigrass_decomposition(A)],
        "ideal-generators": lambda: _ideal_generators(A),
    }
    _emit(table[what](), out)


def _parse_word(s: str) -> list[int]:
    try:
        return [int(v) for v in s.replace(" ", "").split(",") if v]
    except ValueError:
        raise InputError(f"cannot read operator word {s!r}") from None


def cmd_pi(args, out):
    x = parse_input(args.input)
    word = _parse_word(args.word)
    n = x.n
    for i in word:
        if not 1 <= i <= n - 1:
            raise InputError(f"operator index {i} outside [1, {n - 1}]")
    if isinstance(x, Antichain):
        op = pi_anti if args.flavor == "row" else pi_col_anti
        for i in reversed(word):
            x = op(x, i)
        _emit(x.to_json(), out)
    else:
        _emit(_asm_json(apply_word(x, word, args.flavor)), out)


def _schub_anti(a: Antichain) -> MultiPoly:
    c = codim_anti(a)
    return sum((schub_perm(w) for w in a if w.length() == c), MultiPoly.zero(a.n))


def cmd_poly(args, out):
    x = parse_input(args.input)
    if x.n > args.poly_nmax:
        raise BoundExceeded(f"polynomials are limited to n <= {args.poly_nmax}")
    if args.cache_dir:
        os.makedirs(args.cache_dir, exist_ok=True)
        grothendieck.use_cache(PolyCache(os.path.join(args.cache_dir, "polycache.jsonl")))
    if isinstance(x, Antichain):
        f = groth_anti(x) if args.family == "groth" else _schub_anti(x)
    else:
        A = _as_asm(x)
        f = groth_asm(A) if args.family == "groth" else schub_asm(A)
    if args.variant == "single":
        f = substitute_y_zero(f)
    out.write(f.to_text() + "\n")
    _emit(f.to_json(), out)


def cmd_poset(args, out):
    if args.root:
        root = parse_input(args.root)
        if isinstance(root, Antichain):
            raise InputError("interval export needs an ASM or permutation root")
        A = _as_asm(root)
        g = interval_below(A) if args.order == "weak" else strong_interval_below(A, args.nmax)
    elif args.kind == "asm":
        g = weak_poset(args.n, args.nmax) if args.order == "weak" else strong_poset(args.n, args.nmax)
    else:
        if args.n > 4:
            raise BoundExceeded("antichain posets are limited to n <= 4")
        g = weak_poset_anti(args.n) if args.order == "weak" else strong_poset_anti(args.n)
    text = dump(g, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_verify(args, out):
    if args.cache_dir:
        os.makedirs(args.cache_dir, exist_ok=True)
        grothendieck.use_cache(PolyCache(os.path.join(args.cache_dir, "polycache.jsonl")))
    try:
        reports = run_verify(args.suite, args.nmax)
    except KeyError as e:
        raise InputError(e.args[0]) from None
    for r in reports:
        _emit(r.to_json(), out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="asmvar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list ASM(n) or anti(n) as JSON lines")
    e.add_argument("kind", choices=["asm", "antichain"])
    e.add_argument("n", type=int)
    e.add_argument("--nmax", type=int, default=DEFAULT_MAX_N)
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("query", help="compute one datum of an ASM, permutation or antichain")
    q.add_argument("input")
    q.add_argument("what", choices=["rank", "diagram", "essential", "perm-set", "codim",
                                    "descents", "maj", "bigrass", "ideal-generators"])
    q.set_defaults(func=cmd_query)

    w = sub.add_parser("pi", help="apply pi_i (or a word of them, right to left)")
    w.add_argument("input")
    w.add_argument("word", help="an index like 3 or a word like 3,2,1")
    w.add_argument("--flavor", choices=["row", "col"], default="row")
    w.set_defaults(func=cmd_pi)

    g = sub.add_parser("poly", help="Grothendieck or Schubert polynomial")
    g.add_argument("input")
    g.add_argument("--family", choices=["groth", "schub"], default="groth")
    g.add_argument("--variant", choices=["single", "double"], default="double")
    g.add_argument("--nmax", dest="poly_nmax", type=int, default=grothendieck.POLY_MAX_N)
    g.add_argument("--cache-dir")
    g.set_defaults(func=cmd_poly)

    s = sub.add_parser("poset", help="export a poset or a weak/strong interval")
    s.add_argument("n", type=int, nargs="?", default=0)
    s.add_argument("--order", choices=["strong", "weak"], default="weak")
    s.add_argument("--kind", choices=["asm", "antichain"], default="asm")
    s.add_argument("--format", choices=["dot", "json"], default="json")
    s.add_argument("--root", help="export the interval below this element instead")
    s.add_argument("--output", "-o")
    s.add_argument("--nmax", type=int, default=DEFAULT_MAX_N)
    s.set_defaults(func=cmd_poset)

    v = sub.add_parser("verify", help="run theorem suites")
    v.add_argument("suite", help="suite id or 'all'")
    v.add_argument("nmax", type=int, nargs="?", default=4)
    v.add_argument("--cache-dir")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "poset" and not args.root and args.n < 1:
            raise InputError("poset needs n >= 1 or --root")
        code = args.func(args, out)
    except BoundExceeded as e:
        print(f"asmvar: bound exceeded: {e}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, AsmError, ValueError, KeyError) as e:
        print(f"asmvar: bad input: {e}", file=sys.stderr)
        return EXIT_INPUT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
