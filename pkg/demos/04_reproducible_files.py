"""Scripted file outputs through the command-line interface.

Every command is deterministic: the same flags always produce byte-identical
files, so outputs can be diffed across machines and revisions. This script
drives the CLI as a subprocess, the way a shell pipeline would.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(*args):
    result = subprocess.run(
        [sys.executable, "-m", "bohmatom.cli", *args],
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        raise RuntimeError(result.stderr)
    return result


workdir = Path(tempfile.mkdtemp(prefix="bohmatom-demo-"))
print(f"writing files under {workdir}")

print()
print("== field table (Dirac spin up) ==")
field_csv = workdir / "field.csv"
run("field", "--model", "dirac", "--spin", "up",
    "--r-count", "2", "--theta-count", "3", "--phi-count", "4",
    "--out", str(field_csv))
lines = field_csv.read_text().splitlines()
for line in lines[:5]:
    print(line)
print(f"... {len(lines) - 2} data rows total")

rerun_csv = workdir / "field_rerun.csv"
run("field", "--model", "dirac", "--spin", "up",
    "--r-count", "2", "--theta-count", "3", "--phi-count", "4",
    "--out", str(rerun_csv))
identical = field_csv.read_bytes() == rerun_csv.read_bytes()
print(f"rerun byte-identical: {identical}")

print()
print("== trajectory with analytic reference ==")
traj_csv = workdir / "orbit.csv"
run("trajectory", "--model", "dirac", "--spin", "up", "--steps", "200",
    "--out", str(traj_csv))
summary = json.loads((workdir / "orbit.csv.summary.json").read_text())
print(f"steps completed : {summary['steps_completed']}")
print(f"orbit period    : {summary['period']:.6e}")
print(f"max deviation   : {summary['max_deviation']:.3e}")

print()
print("== dilation report ==")
report_json = workdir / "dilation.json"
run("dilate", "--rest-lifetime", "2.196981e-6", "--out", str(report_json))
report = json.loads(report_json.read_text())
print(f"mean_gamma       = {report['mean_gamma']}")
print(f"dilated lifetime = {report['dilated_lifetime']} s")

print()
print("== single-point state inspection ==")
state = json.loads(run("state", "--model", "dirac", "--spin", "up").stdout)
print(f"spinor c1 = {state['spinor'][0]}")
print(f"speed     = {state['speed']}")
