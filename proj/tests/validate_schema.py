#!/usr/bin/env python3
"""Run every subcommand with --format json and validate each output line."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["matrix", "--family", "cycle:4"],
    ["matrix", "--graph6", "D~{"],
    ["ideals", "--family", "cycle:4", "--ring", "Z"],
    ["ideals", "--family", "star:3", "--ring", "Q", "--index", "1..3"],
    ["ideals", "--family", "path:8", "--ring", "R", "--index", "2"],
    ["snf", "--family", "complete:4"],
    ["snf", "--family", "star:2", "--matrix", "laplacian", "--transforms"],
    ["charpoly", "--family", "cycle:4"],
    ["charpoly", "--family", "complete:1"],
    ["classify", "--family", "cycle:4", "--ring", "R"],
    ["classify", "--ring", "Z", "--nmax", "5"],
    ["classify", "--ring", "R", "--nmax", "4"],
    ["families", "verify"],
    ["families", "verify", "--family", "mdiag:3:2"],
    ["corpus", "--nmax", "4"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    validator.check_schema(schema)
    failures = 0
    records = 0
    for args in RUNS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        lines = proc.stdout.splitlines()
        if not lines:
            print(f"FAIL {' '.join(args)}: no output")
            failures += 1
        for line in lines:
            records += 1
            errors = list(validator.iter_errors(json.loads(line)))
            for e in errors:
                print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
            failures += bool(errors)
    print(f"{records} records, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
