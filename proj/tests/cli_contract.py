#!/usr/bin/env python3
"""Exit-code and output contract checks for the atshape CLI.

Usage: cli_contract.py <path-to-binary>
"""
import json
import subprocess
import sys

BIN = sys.argv[1]
failures = 0


def run(args, stdin=None):
    return subprocess.run([BIN] + args, capture_output=True, text=True, input=stdin)


def check(name, cond, context=""):
    global failures
    if cond:
        print("ok   " + name)
    else:
        failures += 1
        print("FAIL " + name + ("  [" + context + "]" if context else ""))


# --- shape ---------------------------------------------------------------
r = run(["shape", "weil", "--p", "3", "--n", "1"])
check("shape weil exits 0", r.returncode == 0, r.stderr)
check("shape weil prints stats", "rank 9  F 6  A 3  ratio 2/1" in r.stdout, r.stdout)

r = run(["shape", "upper2", "--p", "3", "--n", "1"])
check("shape upper2 prints the word", "word: F A F" in r.stdout, r.stdout)

r = run(["shape", "proj", "--p", "3", "--n", "1"])
check("shape proj prints the word", "word: F F F" in r.stdout, r.stdout)

r = run(["shape", "weil", "--p", "3", "--n", "1", "--format", "structured"])
j = json.loads(r.stdout)
check("structured shape record count", len(j["shape"]) == 8, r.stdout)
check("structured shape stats", j["stats"]["countF"] == 6 and j["stats"]["ratio"] == "2/1")
check("structured shape params", j["params"] == {"p": 3, "n": 1, "N": 3})

r = run(["shape", "my", "--p", "3", "--n", "1"])
check("shape my stats", "rank 6  F 4  A 2" in r.stdout, r.stdout)

# usage and bound errors
check("non-prime p is a usage error", run(["shape", "weil", "--p", "4", "--n", "1"]).returncode == 2)
check("p=9 is a usage error", run(["shape", "weil", "--p", "9", "--n", "1"]).returncode == 2)
check("n=0 is a usage error", run(["shape", "weil", "--p", "3", "--n", "0"]).returncode == 2)
check("N beyond --max-N exits 3", run(["shape", "weil", "--p", "3", "--n", "9"]).returncode == 3)
check("unknown kind is a usage error", run(["shape", "nope", "--p", "3", "--n", "1"]).returncode == 2)
check("missing subcommand is a usage error", run([]).returncode == 2)
check("--help exits 0", run(["--help"]).returncode == 0)

# --- grid ----------------------------------------------------------------
r = run(["grid", "shapeR", "--p", "3", "--n", "1"])
check("grid shapeR layout", r.stdout == "F F F\n  A A A\n    F F F\n", repr(r.stdout))

r = run(["grid", "second", "--p", "3", "--n", "1"])
check("grid second layout", r.stdout == "F A F\n  F A F\n    F A F\n", repr(r.stdout))

r = run(["grid", "third", "--p", "3", "--n", "1"])
check("grid third has one row fewer", r.stdout == "F A F\n  F A F\n", repr(r.stdout))

r = run(["grid", "M", "--p", "3", "--n", "1", "--format", "structured"])
j = json.loads(r.stdout)
check("structured grid rows", [row["tile"] for row in j["rows"]] == ["U1", "U1xA", "U1"])

# --- verify --------------------------------------------------------------
for name in ["main1", "main2", "main3", "lemma", "identity"]:
    r = run(["verify", name, "--p", "3", "--n", "1"])
    check("verify %s passes" % name, r.returncode == 0 and ": pass" in r.stdout, r.stdout)

r = run(["verify", "proposition", "--p", "3", "--n", "1"])
check("verify proposition is flagged, exit 0", r.returncode == 0 and ": flagged" in r.stdout, r.stdout)

r = run(["verify", "main3", "--p", "3", "--n", "1", "--format", "structured"])
j = json.loads(r.stdout)
check("structured verify verdict", j["report"]["verdict"] == "pass")
infos = {d["name"]: d["info"] for d in j["report"]["details"]}
check("divisibility detail", "countF=4" in infos["divisibility-obstruction"]
      and "(mod 3)" in infos["divisibility-obstruction"])

r = run(["verify", "main1", "--p", "3", "--n", "3"])
check("verify main1 N=27 passes with skipped uniqueness",
      r.returncode == 0 and "[skipped] exhaustive-unique" in r.stdout, r.stdout)

check("verify bogus check is a usage error", run(["verify", "bogus", "--p", "3", "--n", "1"]).returncode == 2)

# --- decompose -----------------------------------------------------------
r = run(["decompose", "--p", "3", "--n", "1"])
check("decompose default both cases", r.returncode == 0 and "U1xA" in r.stdout and "case2" in r.stdout, r.stdout)

r = run(["decompose", "--p", "3", "--n", "1", "--target", "third", "--tiles", "case1"])
check("stuck decomposition exits 1", r.returncode == 1 and "stuck" in r.stdout, r.stdout)

r = run(["decompose", "--p", "3", "--n", "1", "--target", "third", "--tiles", "case2"])
check("third target tiles with case2", r.returncode == 0 and "2 placements" in r.stdout, r.stdout)

r = run(["decompose", "--p", "3", "--n", "2", "--tiles", "case1", "--exhaustive", "--rank-bound", "10"])
check("exhaustive beyond rank bound exits 3", r.returncode == 3, r.stderr)

r = run(["decompose", "--p", "3", "--n", "1", "--tiles", "case1", "--exhaustive", "--format", "structured"])
j = json.loads(r.stdout)
check("exhaustive uniqueness in structured output",
      j["cases"][0]["exhaustive"] == {"count": 1, "capped": False})

# round-trip: serialized shape fed back through --target-file
shp = json.loads(run(["shape", "my", "--p", "3", "--n", "1", "--format", "structured"]).stdout)
r = run(["decompose", "--p", "3", "--n", "1", "--target-file", "-", "--tiles", "case2"],
        stdin=json.dumps(shp["shape"]))
check("target-file round trip tiles", r.returncode == 0 and "2 placements" in r.stdout, r.stdout)

r = run(["decompose", "--p", "3", "--n", "1", "--target-file", "-", "--tiles", "case2"], stdin="not json")
check("invalid target file is a usage error", r.returncode == 2)

# --- sweep ---------------------------------------------------------------
r = run(["sweep", "--p", "3", "--n-max", "2"])
check("sweep 3^1..3^2 passes", r.returncode == 0, r.stdout + r.stderr)
check("sweep rows", "p=3 n=1 N=3" in r.stdout and "p=3 n=2 N=9" in r.stdout, r.stdout)
check("sweep proposition flagged", "proposition=flagged" in r.stdout, r.stdout)

r = run(["sweep", "--p", "3,5", "--n-max", "1", "--format", "structured"])
j = json.loads(r.stdout)
check("structured sweep rows", len(j["rows"]) == 2 and j["failures"] == 0)

r = run(["sweep", "--p", "3", "--n-max", "9", "--max-N", "100"])
check("sweep skips beyond --max-N", r.returncode == 0 and "skipped" in r.stdout, r.stdout)

r = run(["sweep"])
check("empty sweep succeeds", r.returncode == 0, r.stdout + r.stderr)

check("sweep with even p is a usage error", run(["sweep", "--p", "4", "--n-max", "1"]).returncode == 2)

print("cli contract: %d failure(s)" % failures)
sys.exit(1 if failures else 0)
