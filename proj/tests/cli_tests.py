#!/usr/bin/env python3
"""CLI contract checks: exit codes, fixture verdicts, output shapes."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
FIXTURES = Path(sys.argv[2])

failures = []


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def expect(name, condition, context=""):
    tag = "ok" if condition else "FAIL"
    print(f"{tag:4} {name}")
    if not condition:
        failures.append(f"{name}: {context}")


def fixture(name):
    return str(FIXTURES / f"{name}.json")


# --- check: verdicts and exit codes -----------------------------------------

r = run("check", fixture("fig1"))
expect("fig1 infeasible exits 2", r.returncode == 2, r.stdout + r.stderr)
expect("fig1 names the witness pair", "0 and 1" in r.stdout, r.stdout)

for name in ["fig2", "fig3", "fig4", "fig5a", "triangle"]:
    r = run("check", fixture(name))
    expect(f"{name} feasible exits 0", r.returncode == 0, r.stdout + r.stderr)

r = run("check", fixture("fig1"), "--json")
doc = json.loads(r.stdout)
expect("check --json carries the witness",
       doc["feasible"] is False and doc["witness"]["i"] == 0 and doc["witness"]["j"] == 1,
       r.stdout)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write("{ not json")
    broken = fh.name
r = run("check", broken)
expect("malformed file exits 1", r.returncode == 1, r.stderr)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(json.dumps({
        "version": 1, "dim": 1,
        "start": {"t": "0", "x": ["0"]},
        "pairs": [{"call": {"t": "5", "x": ["0"]}, "reveal": {"t": "0", "x": ["0"]}}],
    }))
    backwards = fh.name
r = run("check", backwards)
expect("invalid diamond exits 1", r.returncode == 1, r.stdout + r.stderr)

# --- plan: summaries and refusal codes ---------------------------------------

r = run("plan", fixture("fig5a"), "--strategy", "cws")
expect("fig5a cws plan reports 12 code qubits", "12 code qubits" in r.stdout, r.stdout)

r = run("plan", fixture("triangle"), "--strategy", "recursive")
expect("triangle recursive plan reports 3 leaves", "leaf count 3" in r.stdout, r.stdout)

r = run("plan", fixture("fig2"), "--strategy", "chain")
expect("fig2 chain order is D0 then D1", "[D0, D1]" in r.stdout, r.stdout)

r = run("plan", fixture("fig1"))
expect("infeasible plan exits 2", r.returncode == 2, r.stderr)

r = run("plan", fixture("fig3"), "--strategy", "chain")
expect("chain on 2+1D exits 3", r.returncode == 3, r.stderr)

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "plan.json"
    r = run("plan", fixture("fig4"), "--strategy", "n2", "-o", str(out))
    doc = json.loads(out.read_text())
    expect("plan file round-trips as JSON", doc["strategy"] == "n2" and doc["version"] == 1,
           r.stdout)

# --- simulate -----------------------------------------------------------------

r = run("simulate", fixture("fig4"), "--call", "0", "--state", "Z+")
expect("fig4 call-0 simulation succeeds", r.returncode == 0 and "success" in r.stdout,
       r.stdout + r.stderr)

for name in ["fig2", "fig3", "fig4", "fig5a", "triangle"]:
    r = run("simulate", fixture(name), "--all")
    lines = [ln for ln in r.stdout.splitlines() if ln.startswith("call=")]
    n = {"fig2": 2, "fig3": 3, "fig4": 2, "fig5a": 4, "triangle": 3}[name]
    expect(f"{name} --all sweeps (n+1)*6 runs and exits 0",
           r.returncode == 0 and len(lines) == (n + 1) * 6,
           f"rc={r.returncode} lines={len(lines)}")

with tempfile.TemporaryDirectory() as tmp:
    log = Path(tmp) / "events.jsonl"
    r = run("simulate", fixture("fig2"), "--call", "0", "--log", str(log))
    events = [json.loads(ln) for ln in log.read_text().splitlines()]
    expect("message log exports as JSON lines",
           r.returncode == 0 and events and all("from" in e and "to" in e for e in events),
           log.read_text()[:200])

r = run("simulate", fixture("fig1"), "--call", "0")
expect("simulating an infeasible task exits 2", r.returncode == 2, r.stderr)

r = run("simulate", fixture("fig2"), "--strategy", "chain", "--call", "1", "--json")
doc = json.loads(r.stdout)
expect("chain simulation JSON reports success", doc["success"] is True, r.stdout)

# --- code ---------------------------------------------------------------------

r = run("code", "-n", "4")
expect("code -n 4 reports 12 qubits", "12 code qubits" in r.stdout, r.stdout)
expect("code -n 4: all kept-sets correctable", "4/4 kept-sets correctable" in r.stdout,
       r.stdout)

r = run("code", "-n", "2")
expect("code -n 2 lists XZ and ZX", "+XZ" in r.stdout and "+ZX" in r.stdout, r.stdout)

r = run("code", fixture("fig3"), "--json")
doc = json.loads(r.stdout)
expect("code report on fig3 has 6 qubits", doc["qubits"] == 6, r.stdout)
expect("code report vertices all pass",
       all(v["erasure_correctable"] and not v["complement_correctable"]
           for v in doc["per_vertex"]), r.stdout)

# --- diagram ------------------------------------------------------------------

with tempfile.TemporaryDirectory() as tmp:
    svg = Path(tmp) / "fig2.svg"
    r = run("diagram", fixture("fig2"), "-o", str(svg))
    content = svg.read_text()
    expect("fig2 diagram is SVG", r.returncode == 0 and content.startswith("<svg"), r.stderr)
    expect("fig2 diagram draws both diamonds", content.count("polygon") >= 2, "")

r = run("diagram", fixture("fig5a"), "--graph", "-o", "-")
expect("fig5a graph is a digraph", r.stdout.startswith("digraph"), r.stdout[:80])
expect("fig5a graph is complete", sum("->" in ln for ln in r.stdout.splitlines()) >= 6,
       r.stdout)

r = run("diagram", fixture("fig5a"), "--doubled-graph", "-o", "-")
expect("doubled graph lists 12 qubits", r.stdout.count("label=\"q") == 12, r.stdout[:200])

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(json.dumps({
        "version": 1, "dim": 3, "axis_radicands": [1, 1, 1],
        "start": {"t": "0", "x": ["0", "0", "0"]},
        "pairs": [{"call": {"t": "1", "x": ["0", "0", "0"]},
                   "reveal": {"t": "2", "x": ["0", "0", "0"]}}],
    }))
    threed = fh.name
r = run("diagram", threed, "-o", "-")
expect("3+1D diagram exits 3 with a clean error", r.returncode == 3 and
       "dimension" in r.stderr, r.stderr)

print()
if failures:
    print(f"{len(failures)} CLI contract checks failed:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("all CLI contract checks passed")
