#!/usr/bin/env python3
"""End-to-end checks of the command line tool: every subcommand, the file
round-trips between them, and the exit-code contract (0 clean, 1 violation,
2 usage, 3 budget)."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
GOLDEN = (1 + 5**0.5) / 2


def run(*args, env=None, expect=0):
    full = dict(os.environ)
    if env:
        full.update(env)
    res = subprocess.run([BIN, *args], capture_output=True, text=True, env=full)
    assert res.returncode == expect, (
        args, res.returncode, expect, res.stdout[-400:], res.stderr[-400:])
    return res


tmp = tempfile.mkdtemp(prefix="hyperlat_cli_")
t6 = os.path.join(tmp, "t6.json")
z2 = os.path.join(tmp, "z2.json")

# --- gen writes a loadable ball ------------------------------------------
out = run("gen", "--degree", "6", "--face-degree", "3", "--radius", "6",
          "--out", t6).stdout
assert "127 vertices" in out, out
run("gen", "--degree", "4", "--face-degree", "4", "--radius", "2", "--out", z2)
doc = json.load(open(t6))
assert doc["kind"] == "ball"
assert len(doc["layers"]) == 127
assert doc["meta"]["d"] == 6

# --- cheeger reads it back ------------------------------------------------
lines = run("cheeger", "--patch", t6).stdout.strip().split("\n")
assert lines[0] == "n,ball,boundary,ratio,target,abs_err"
assert len(lines) == 7
n0 = lines[1].split(",")
assert n0[:3] == ["0", "1", "6"]

quad = run("cheeger", "--degree", "5", "--face-degree", "4",
           "--radius", "6").stdout.strip().split("\n")
last = quad[-1].split(",")
assert last[:3] == ["5", "441", "720"]
assert abs(float(last[3]) - GOLDEN) < 0.05
assert abs(float(last[4]) - GOLDEN) < 1e-9

# --- pairs census ---------------------------------------------------------
cen = os.path.join(tmp, "census.json")
run("pairs", "--patch", t6, "--max-cluster", "4", "--out", cen)
census = json.load(open(cen))
assert census["violations"] == 0
assert census["roundtrip_failures"] == 0
assert census["clusters_enumerated"] == 216  # rooted clusters of size <= 4
assert census["distinct_pairs"] > 0
assert all(e["b"] > 0 for e in census["counts"])
run("pairs", "--patch", t6, "--max-cluster", "4", "--regime", "quad", expect=2)
run("pairs", "--patch", t6, "--max-cluster", "4", "--regime", "deg6")

# --- perc sweeps ----------------------------------------------------------
sw = os.path.join(tmp, "sweep.csv")
sw2 = os.path.join(tmp, "sweep2.csv")
run("perc", "--patch", z2, "--p", "0.2,0.7", "--trials", "2000",
    "--seed", "5", "--out", sw)
rows = open(sw).read().strip().split("\n")
assert rows[0] == "p,radius,trials,hits,estimate,std_err"
assert len(rows) == 3  # one checkpoint (radius 2) per intensity
run("perc", "--patch", z2, "--p", "0.2,0.7", "--trials", "2000",
    "--seed", "5", "--out", sw2)
assert open(sw).read() == open(sw2).read()

sure = run("perc", "--patch", z2, "--p", "1", "--trials", "50").stdout
assert ",50,50,1,0" in sure

two = run("perc", "--patch", z2, "--p", "0.5", "--radius-checkpoints", "1,2",
          "--trials", "100").stdout.strip().split("\n")
assert len(two) == 3
run("perc", "--patch", z2, "--p", "0.5", "--trials", str(10**15), expect=3)
run("perc", "--patch", z2, "--p", "1.5", "--trials", "10", expect=2)

# --- bounds ---------------------------------------------------------------
b7 = json.loads(run("bounds", "--degree", "7", "--face-degree", "3").stdout)
assert abs(b7["lower_bound"] - 0.34548) < 5e-4
assert abs(b7["upper_bound"] - 0.38197) < 5e-4
assert not b7["exact"]
assert abs(b7["growth"] - GOLDEN) < 1e-12

b6 = json.loads(run("bounds", "--degree", "6", "--face-degree", "3").stdout)
assert b6["exact"]
assert b6["exact_value"] == "2/3"
assert b6["lower_bound"] == b6["upper_bound"]

b5 = json.loads(run("bounds", "--degree", "5", "--face-degree", "4").stdout)
assert abs(b5["lower_bound"] - 0.37690) < 5e-4
assert abs(b5["growth"] - GOLDEN) < 1e-12

bb = json.loads(run("bounds", "--degree", "7", "--face-degree", "3",
                    "--beta", "1").stdout)
assert abs(bb["nonamenable_lower"] - 0.5) < 1e-12
run("bounds", "--degree", "4", "--face-degree", "3", expect=2)

# --- verify suites --------------------------------------------------------
rep = json.loads(run("verify", "--suite", "disc", "--boundary-max", "7",
                     "--vertex-max", "10").stdout)
assert rep["violations"] == 0
assert rep["checked"] == 13  # 1+1+1+4+6 instances up to boundary seven
assert rep["fixtures"] == []

rep = json.loads(run("verify", "--suite", "pairs", "--degree", "6",
                     "--face-degree", "3", "--radius", "6",
                     "--max-cluster", "4").stdout)
assert rep["violations"] == 0
assert rep["checked"] == census["distinct_pairs"]

rep = json.loads(run("verify", "--suite", "perc-oracle", "--patch", z2,
                     "--trials", "20000").stdout)
assert rep["violations"] == 0
assert rep["checked"] == 3

# --- exit-code contract ---------------------------------------------------
run(expect=2)  # no subcommand
run("cheeger", expect=2)  # no input source
run("cheeger", "--patch", t6, "--degree", "6", expect=2)  # two sources
run("verify", "--suite", "bogus", expect=2)
run("gen", "--degree", "6", expect=2)
run("verify", "--suite", "disc", "--boundary-max", "12", expect=3)
run("gen", "--degree", "7", "--face-degree", "3", "--radius", "12",
    "--out", os.path.join(tmp, "huge.json"),
    env={"HYPERLAT_BUDGET": "1000"}, expect=3)

print("cli checks passed")
