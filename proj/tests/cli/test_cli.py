"""End-to-end checks of the dposet binary: exit codes, examples, round trips and JSON schemas."""

import json
import os
import pathlib
import subprocess
import sys

import jsonschema

BINARY = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("DPOSET_MAX_DEGREE", None)
    if env:
        full_env.update(env)
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    if not cond:
        failures.append(what)


def validated(schema, *args):
    code, out, err = run(*args, "--format", "json")
    check(code in (0, 2), f"{args}: exit {code} {err}")
    try:
        doc = json.loads(out)
        jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{args}: {e}")
        return None
    return doc


# examples
code, out, _ = run("enumerate", "--family", "spp", "--degree", "3")
check(code == 0 and len(out.splitlines()) == 6, "enumerate spp 3")
code, out, _ = run("theta", "SP(3;1<3,2<3)")
check(code == 0 and set(out.strip().split(" + ")) == {"213", "123"}, f"theta example: {out!r}")
code, out, _ = run("verify", "--suite", "bidendriform", "--max-degree", "4")
check(code == 0 and out.strip().endswith("pass"), f"verify bidendriform: {out!r}")

# exit codes
check(run("frobnicate")[0] == 1, "unknown verb exits 1")
check(run("enumerate", "--family", "sp", "--degree", "3", "--bogus")[0] == 1, "unknown flag exits 1")
check(run("psi", "SP(3;1<3)")[0] == 1, "domain error exits 1")
check(run("enumerate", "--family", "sp", "--degree", "7")[0] == 1, "default degree cap is 6")
check(run("enumerate", "--family", "sp", "--degree", "3", env={"DPOSET_MAX_DEGREE": "2"})[0] == 1, "env cap")
code, out, _ = run("isometry", "verify", "--alpha", "I", "--beta", "1/2+1/2*I")
check(code == 2, "alpha = I with beta = 1/2+1/2*I exits 2")
rerun = [line for line in out.splitlines() if line.startswith("dposet isometry verify")]
check(len(rerun) == 1, "failure printed as a command")
check(run("isometry", "verify")[0] == 0, "default degree-2 isometry exits 0")

# round trip: every printed poset re-parses to the same canonical value
for fam in ("sp", "hop", "of", "spp", "pp", "wnp", "spf"):
    _, out, _ = run("enumerate", "--family", fam, "--degree", "3")
    for line in out.splitlines():
        code, again, _ = run("classify", line, "--format", "json")
        check(code == 0 and json.loads(again)["poset"] == line, f"round trip {line}")
code, out, _ = run("phi", "2413")
code2, back, _ = run("psi", out.strip())
check(back.strip() == "2413", "phi/psi round trip")

# schemas
validated("enumerate", "enumerate", "--family", "pp", "--degree", "3")
validated("classify", "classify", "SP(3;1<3,2<3)")
validated("op", "op", "product", "SP(1;)", "SP(2;1<2)")
validated("op", "op", "coproduct", "SP(3;1<2,1<3)")
validated("op", "op", "nwarrow", "132", "12")
validated("op", "op", "prec", "SP(1;)", "SP(2;)")
validated("op", "op", "succ", "SP(1;)", "SP(2;)")
validated("op", "op", "delta-prec", "SP(3;1<3,2<3)", "--primed")
validated("op", "op", "delta-succ", "41325")
validated("pair", "pair", "SP(2;)", "SP(2;1<2)")
doc = validated("gram", "gram", "--family", "sp", "--degree", "2")
check(doc is not None and doc["matrix"] == [[2, 1, 1], [1, 1, 0], [1, 0, 1]], "gram json")
doc = validated("kernel", "kernel", "--family", "sp", "--degree", "2")
check(doc is not None and doc["basis"] == ["SP(2;) - SP(2;1<2) - SP(2;2<1)"], "kernel json")
validated("theta", "theta", "SP(3;1<2)")
doc = validated("upsilon", "upsilon", "SP(2;2<1)", "--method", "rewrite")
check(doc is not None and doc["result"] == "SP(2;) - SP(2;1<2)", "upsilon rewrite")
validated("phi", "phi", "132")
validated("psi", "psi", "SP(3;1<3,2<3)")
validated("bruhat-interval", "bruhat-interval", "SP(3;1<3,2<3)")
doc = validated("diagonalize", "diagonalize", "--matrix", "[[0,1],[1,2]]")
check(doc is not None and doc["blocks"] == ["hyperbolic"], "diagonalize json")
validated("isometry-build", "isometry", "build", "--source", "pp", "--target", "spp", "--degree", "3")
doc = validated("isometry-verify", "isometry", "verify", "--alpha", "I", "--beta", "1/2+1/2*I")
check(doc is not None and len(doc["failures"]) == 3, "alpha = I reports 3 failures")
doc = validated("decorations", "decorations", "--family", "hof", "--order", "5")
check(doc is not None and doc["decorations"] == ["0", "1", "0", "1", "6", "39"], "decorations json")
doc = validated("verify", "verify", "--suite", "all", "--max-degree", "3")
check(doc is not None and doc["pass"], "verify all")

# csv renders the gram matrix row by row
_, out, _ = run("gram", "--family", "spp", "--degree", "2", "--format", "csv")
check(out.splitlines() == ["2,1", "1,1"], f"gram csv {out!r}")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
