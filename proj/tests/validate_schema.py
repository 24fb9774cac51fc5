#!/usr/bin/env python3
"""Run each CLI command with --json and validate the output against the report schema."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ["exact", "symmetric", "3"],
    ["exact", "elementary", "3", "4"],
    ["exact", "cyclic", "1"],
    ["mc", "--trials", "500", "--seed", "3", "alternating", "4"],
    ["bounds", "symmetric", "4"],
    ["bounds", "alternating", "5"],
    ["bounds", "cyclic", "1"],
    ["bounds", "affine", "2", "2", "[[0,1],[1,1]]", "power", "2"],
    ["crowns", "symmetric", "4"],
    ["crowns", "symmetric", "5"],
    ["verify-paper", "--mc-seeds", "5", "--trials", "2000"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in CASES:
        proc = subprocess.run([cli, *args[:1], "--json", *args[1:]], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    # the schema must reject an obviously broken report
    if validator.is_valid({"schema_version": "1.0", "command": "exact"}):
        print("FAIL schema accepted an exact report without payload")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
