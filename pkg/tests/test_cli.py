import io
import json
import subprocess
import sys

from asmvar import golden
from asmvar.antichains import Antichain
from asmvar.asm_core import Asm, Permutation
from asmvar.cli import main, parse_input
from asmvar.polynomials import MultiPoly

ROTHE = "0,0,1,0;1,0,-1,1;0,1,0,0;0,0,1,0"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(l) for l in text.splitlines() if l.strip()]


def rows(A: Asm) -> str:
    return json.dumps(A.to_json())


def test_parse_input_forms(tmp_path):
    assert parse_input("312") == Permutation.parse("312")
    assert parse_input(ROTHE) == golden.ROTHE
    assert parse_input(rows(golden.ROTHE)) == golden.ROTHE
    assert parse_input('{"n": 3, "oneline": [3, 1, 2]}') == Permutation.parse("312")
    assert parse_input("{213,132}") == Antichain.parse("213,132")
    assert parse_input('{"n": 3, "perms": [[1,3,2],[2,1,3]]}') == Antichain.parse("213,132")
    f = tmp_path / "a.json"
    f.write_text(rows(golden.ROTHE))
    assert parse_input(str(f)) == golden.ROTHE


def test_enumerate():
    code, out = run("enumerate", "asm", "3")
    objs = lines(out)
    assert code == 0 and len(objs) == 8 and objs[-1] == {"count": 7}
    code, out = run("enumerate", "antichain", "3")
    assert lines(out)[-1] == {"count": 8}
    assert lines(run("enumerate", "asm", "1")[1])[-1] == {"count": 1}


def test_query():
    assert lines(run("query", ROTHE, "essential")[1]) == [[[1, 2], [2, 3]]]
    assert lines(run("query", rows(golden.BIG), "codim")[1]) == [16]
    assert lines(run("query", "123", "perm-set")[1]) == [{"n": 3, "perms": [[1, 2, 3]]}]
    assert lines(run("query", ROTHE, "perm-set")[1]) == [{"n": 4, "perms": [[3, 4, 1, 2], [4, 1, 2, 3]]}]
    assert lines(run("query", ROTHE, "descents")[1]) == [[1, 2]]
    assert lines(run("query", ROTHE, "maj")[1]) == [3]
    diag = lines(run("query", ROTHE, "diagram")[1])[0]
    assert diag == {"D": [[1, 1], [1, 2]], "N": [[2, 3]]}
    gens = lines(run("query", ROTHE, "ideal-generators")[1])[0]
    assert [g["cell"] for g in gens] == [[1, 2], [2, 3]]
    rank = lines(run("query", "21", "rank")[1])[0]
    assert rank == [[0, 0, 0], [0, 0, 1], [0, 1, 2]]
    assert run("query", ROTHE, "bigrass")[0] == 0
    assert lines(run("query", "{213,132}", "maj")[1]) == [3]
    assert run("query", "{213,132}", "rank")[0] == 2


def test_pi():
    code, out = run("pi", rows(golden.CHAIN_A), "3")
    obj = lines(out)[0]
    assert code == 0 and obj["perm"] == [3, 1, 2, 5, 4]
    obj = lines(run("pi", ROTHE, "3,2,1")[1])[0]
    assert obj["perm"] == [1, 2, 3, 4]
    obj = lines(run("pi", "123", "1")[1])[0]
    assert obj["perm"] == [1, 2, 3]
    obj = lines(run("pi", "312", "2", "--flavor", "col")[1])[0]
    assert obj["perm"] == [2, 1, 3]
    assert lines(run("pi", "{231,312}", "2")[1]) == [{"n": 3, "perms": [[2, 1, 3]]}]
    assert run("pi", "123", "3")[0] == 2
    assert run("pi", "123", "x")[0] == 2


def test_poly():
    code, out = run("poly", "{213,132}", "--variant", "single")
    text, obj = out.splitlines()
    assert code == 0
    assert MultiPoly.parse(3, text) == MultiPoly.parse(3, golden.ANTI_EXAMPLE_GROTH)
    assert MultiPoly.from_json(json.loads(obj)) == MultiPoly.parse(3, text)
    assert run("poly", "21", "--family", "schub")[1].splitlines()[0] == "x1 - y1"
    assert run("poly", "123")[1].splitlines()[0] == "1"
    assert run("poly", "123456")[0] == 3


def test_poly_cache_dir(tmp_path):
    code, out = run("poly", ROTHE, "--cache-dir", str(tmp_path))
    assert code == 0
    header = json.loads((tmp_path / "polycache.jsonl").read_text().splitlines()[0])
    assert header == {"format": "asmvar-polycache", "version": 1}
    assert run("poly", ROTHE, "--cache-dir", str(tmp_path))[1] == out


def test_poset(tmp_path):
    code, out = run("poset", "3", "--kind", "antichain", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    assert out.count("->") == len(golden.ANTI3_WEAK)
    obj = lines(run("poset", "--root", rows(golden.INTERVAL_A))[1])[0]
    assert len(obj["nodes"]) == 10 and len(obj["edges"]) == 13
    obj = lines(run("poset", "1", "--order", "strong")[1])[0]
    assert len(obj["nodes"]) == 1 and obj["edges"] == []
    path = tmp_path / "p.dot"
    assert run("poset", "2", "--format", "dot", "-o", str(path))[0] == 0
    assert path.read_text().startswith("digraph")
    assert run("poset")[0] == 2
    assert run("poset", "5", "--kind", "antichain")[0] == 3


def test_verify():
    code, out = run("verify", "ddo", "4")
    rep = lines(out)[0]
    assert code == 0 and rep["checked"] == 42 * 3 and rep["failures"] == []
    rep = lines(run("verify", "chains-codim", "5")[1])[0]
    assert rep["checked"] == 429 and rep["passed"]
    assert run("verify", "nope", "3")[0] == 2


def test_verify_failure_exit(monkeypatch):
    import asmvar.verify as V
    monkeypatch.setitem(V.SUITES, "broken", lambda nmax: V._run("broken", "x", [(1,)], lambda k: False))
    code, out = run("verify", "broken", "3")
    assert code == 1 and lines(out)[0]["failures"] == ["1"]


def test_error_codes():
    assert run("query", "0,1;1,1", "rank")[0] == 2
    assert run("query", "not-a-perm", "rank")[0] == 2
    assert run("query", '{"n": 2}', "rank")[0] == 2
    assert run("enumerate", "asm", "7")[0] == 3
    assert run("enumerate", "antichain", "5")[0] == 3


def test_deterministic_output():
    a = run("enumerate", "antichain", "3")[1]
    b = run("enumerate", "antichain", "3")[1]
    assert a == b
    assert run("poset", "3", "--format", "dot")[1] == run("poset", "3", "--format", "dot")[1]


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "asmvar.cli", "query", "312", "codim"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "2"
    res = subprocess.run([sys.executable, "-m", "asmvar.cli", "query", "1,1;0,0", "rank"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 2 and "bad input" in res.stderr
