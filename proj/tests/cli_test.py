"""End-to-end checks of the ore3 CLI: JSON output against the schemas, exit codes,
and the construct | stats round trip.

usage: cli_test.py <ore3 binary> <schema dir>
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

registry = Registry().with_resources(
    (p.name, Resource.from_contents(json.loads(p.read_text()))) for p in SCHEMAS.glob("*.schema.json")
)


def validator(name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


ENVELOPE = validator("envelope")
failures = []


def run(args, stdin=None, want_rc=0):
    p = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)
    if p.returncode != want_rc:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, wanted {want_rc}; stderr: {p.stderr.strip()}")
    return p


def report(args, sub, stdin=None, want_rc=0):
    p = run([*args, "--json", "-"], stdin, want_rc)
    try:
        doc = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{' '.join(args)}: not JSON ({e})")
        return None
    for v, part, label in ((ENVELOPE, doc, "envelope"), (validator(sub), doc.get("result"), sub)):
        for err in v.iter_errors(part):
            failures.append(f"{' '.join(args)}: {label} schema: {err.message} at {list(err.absolute_path)}")
    if doc.get("subcommand") != sub:
        failures.append(f"{' '.join(args)}: subcommand {doc.get('subcommand')!r}")
    return doc


def check(cond, what):
    if not cond:
        failures.append(what)


def construct(*args):
    return run(["construct", *args]).stdout


# construct | stats golden table: (construct args, n, m, delta1, sigma2, alpha)
GOLDEN = [
    (["h12", "--n", "15", "--x", "3", "--y", "1"], 15, 273, 21, 94, 4),
    (["h-ell", "--n", "12", "--s", "4", "--ell", "2"], 12, 140, 21, 66, 5),
    (["h-ell", "--n", "12", "--s", "4", "--ell", "3"], 12, 165, 0, 90, 2),
    (["h12", "--n", "9", "--x", "0", "--y", "0"], 9, 0, 0, None, 9),
]
for args, n, m, d1, s2, alpha in GOLDEN:
    text = construct(*args)
    plain = run(["stats", "-"], stdin=text).stdout.split("\n")
    fields = dict(line.split(" ", 1) for line in plain if line)
    check(fields.get("n") == str(n) and fields.get("m") == str(m), f"stats {args}: {fields}")
    doc = report(["stats", "-"], "stats", stdin=text)
    if doc:
        r = doc["result"]
        got = (r["n"], r["m"], r["delta1"], r["sigma2"], r["alpha"])
        check(got == (n, m, d1, s2, alpha), f"stats {args}: got {got}")
        check(len(r["independent_witness"]) == alpha, f"stats {args}: witness size")

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    (tmp / "h15.txt").write_text(construct("h12", "--n", "15", "--x", "3", "--y", "1"))
    (tmp / "k6.txt").write_text("6 20\n" + "".join(
        f"{a} {b} {c}\n" for a in range(6) for b in range(a + 1, 6) for c in range(b + 1, 6)))
    (tmp / "bad.txt").write_text("4 1\n0 1 9\n")
    (tmp / "dense.txt").write_text(construct("random", "--n", "60", "--p", "0.8", "--seed", "7"))

    doc = report(["match", str(tmp / "h15.txt"), "--max"], "match")
    check(doc and doc["result"]["matching"]["size"] == 4, "match --max on h12(15,3,1)")
    report(["match", str(tmp / "h15.txt"), "--perfect"], "match", want_rc=1)
    doc = report(["match", str(tmp / "k6.txt"), "--perfect"], "match")
    check(doc and doc["result"]["matching"]["perfect"], "K6 perfect matching")
    run(["stats", str(tmp / "bad.txt")], want_rc=2)
    run(["stats", str(tmp / "missing.txt")], want_rc=2)

    doc = report(["absorb", "--graph", str(tmp / "dense.txt"), "--restarts", "2"], "absorb")
    if doc:
        demo = doc["result"]["absorb_demo"]
        check(demo["outcome"] == "success", f"absorb outcome {demo['outcome']}")
        check(doc["seed"] == 0xC0FFEE, "absorb default seed")

doc = report(["sweep", "--n", "15"], "sweep")
check(doc and doc["result"]["max"] == 94 and doc["result"]["argmax"] == [[3, 1]], "sweep n=15")
csv = run(["sweep", "--n", "15", "--csv"]).stdout.splitlines()
check(csv and csv[0] == "x,y,sigma2,two_f1,f2,is_max", f"csv header {csv[:1]}")
run(["sweep", "--n", "16"], want_rc=2)

for n, s2 in ((15, 94), (21, 201), (30, 442)):
    doc = report(["certify", "--n", str(n)], "certify")
    check(doc and doc["result"]["sigma2"] == s2 and doc["result"]["all_hold"], f"certify n={n}")

LEMMAS = [
    ["--id", "bipartite-fact"],
    ["--id", "kpartite-16"],
    ["--id", "weighted-20"],
    ["--id", "aharoni-howard", "--n", "2", "--s", "2"],
    ["--id", "intersect-6n", "--n", "4"],
    ["--id", "intersect-3n", "--n", "6", "--samples", "20000", "--restarts", "2"],
    ["--id", "ab-6a", "--a", "2", "--b", "1"],
    ["--id", "ab-8a", "--a", "3", "--b", "3", "--samples", "20000", "--seed", "5", "--restarts", "2"],
]
for args in LEMMAS:
    doc = report(["verify-lemma", *args], "verify-lemma")
    check(doc and doc["result"]["holds"], f"verify-lemma {args}")
run(["verify-lemma", "--id", "no-such-lemma"], want_rc=2)
run(["verify-lemma", "--id", "intersect-6n", "--n", "9", "--exhaustive"], want_rc=2)

check(run(["--version"]).stdout.strip() != "", "--version prints")
run(["frobnicate"], want_rc=2)

for f in failures:
    print("FAIL:", f)
print(f"{'PASS' if not failures else 'FAIL'}: {len(failures)} failures")
sys.exit(1 if failures else 0)
