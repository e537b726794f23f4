"""Regenerates fixtures/expected/<id>.json from the CLI. Usage: python3 fixtures/record_expected.py path/to/loggw"""
import json
import os
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
cli = os.path.abspath(sys.argv[1])
os.makedirs(os.path.join(HERE, "expected"), exist_ok=True)
for job in json.load(open(os.path.join(HERE, "manifest.json"))):
    r = subprocess.run([cli, *job["args"], "--threads", "1"], cwd=HERE, capture_output=True, text=True)
    if r.returncode != job["exit"]:
        sys.exit("%s: exit %d, expected %d" % (job["id"], r.returncode, job["exit"]))
    with open(os.path.join(HERE, "expected", job["id"] + ".json"), "w") as f:
        f.write(r.stdout)
