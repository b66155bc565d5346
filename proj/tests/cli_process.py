"""Runs the ncq binary as a process: exit codes, JSON schema conformance."""
import json
import pathlib
import subprocess
import sys

import jsonschema

ncq, systems, schema_path = sys.argv[1], pathlib.Path(sys.argv[2]), sys.argv[3]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)
failures = []


def run(*args):
    return subprocess.run([ncq, *map(str, args)], capture_output=True, text=True, timeout=300)


def expect(cond, what):
    if not cond:
        failures.append(what)


failing = {("broken", "jacobi"), ("broken", "assoc"), ("broken", "report"),
           ("counterexample", "center"), ("counterexample", "report")}
fixture_exprs = {"heisenberg": ("q", "p"), "manin": ("y", "x"), "counterexample": ("y", "x"),
                 "fuzzy-sphere": ("z", "y"), "sphere-torus": ("z", "y"), "broken": ("x3", "x1")}
for path in sorted(systems.glob("*.ncq")):
    f, g = fixture_exprs[path.stem]
    for cmd in (["order", f"{f}*{g}"], ["star", f, g], ["jacobi"], ["assoc", "--samples", "20"],
                ["center"], ["report", "--samples", "20"]):
        r = run(cmd[0], path, *cmd[1:], "--format", "json")
        label = f"{path.stem} {cmd[0]}"
        try:
            doc = json.loads(r.stdout)
        except json.JSONDecodeError:
            failures.append(f"{label}: output is not JSON")
            continue
        for err in validator.iter_errors(doc):
            failures.append(f"{label}: {err.message}")
        expected = 1 if (path.stem, cmd[0]) in failing else 0
        expect(r.returncode == expected, f"{label}: exit {r.returncode}, expected {expected}")

bad = pathlib.Path(sys.argv[4]) / "malformed.ncq"
bad.write_text("generators x, y;\ncomm [x, y] = x $ y;\n")
r = run("jacobi", bad)
expect(r.returncode == 2, f"malformed file: exit {r.returncode}")
expect(f"{bad}:2:17:" in r.stderr, f"malformed file diagnostic: {r.stderr!r}")
expect(run().returncode == 2, "no arguments")
expect(run("jacobi", systems / "heisenberg.ncq", "--bogus").returncode == 2, "unknown flag")

for line in failures:
    print("FAIL", line)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
