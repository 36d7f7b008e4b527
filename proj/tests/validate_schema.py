#!/usr/bin/env python3
"""Runs every subcommand with --json and validates the output.

usage: validate_schema.py CLI SCHEMA DATA_DIR
"""
import json
import subprocess
import sys

import jsonschema

cli, schema_path, data_dir = sys.argv[1:4]

with open(schema_path, encoding="utf-8") as fh:
    schema = json.load(fh)
jsonschema.Draft202012Validator.check_schema(schema)
report = jsonschema.Draft202012Validator(schema)
error = jsonschema.Draft202012Validator({"$defs": schema["$defs"], "$ref": "#/$defs/error"})

# (argv, expected exit code)
CASES = [
    (["normalize", "7", "-4"], 0),
    (["normalize", "1", "5"], 0),
    (["split", "5", "2"], 0),
    (["split", "13", "-8"], 0),
    (["tree", "1", "0"], 0),
    (["tree", "13", "5"], 0),
    (["certify", "13", "5"], 0),
    (["certify", "2", "1"], 0),
    (["certify", "7", "3", "--left", "4", "1"], 1),
    (["certify", "7", "10", "--left", "4", "5"], 1),
    (["dims", "2", "2", "1"], 0),
    (["dims", "2", "2", "1", "--fixed-det"], 0),
    (["dims", "0", "3", "1"], 0),
    (["dims", "7", "11", "4", "--fixed-det"], 0),
    (["autoeq", "3", "3", "1"], 0),
    (["autoeq", "3", "2", "1"], 0),
    (["autoeq", "4", "5", "2", "--max-table", "10"], 0),
    (["autoeq", "2", "2", "1"], 0),
    (["autoeq", "2", "2", "1", "--symmetry", "trivial"], 0),
    (["autoeq", "2", "2", "1", "--symmetry", f"{data_dir}/genus2_involution.sym"], 0),
    (["autoeq", "3", "3", "1", "--symmetry", f"{data_dir}/genus3_order3.sym"], 0),
    (["autoeq", "2", "3", "1"], 3),
    (["autoeq", "1", "3", "2"], 0),
    (["autoeq", "0", "1", "0"], 0),
]

ERROR_CASES = [
    (["split", "4", "2"], 2),
    (["autoeq", "0", "2", "1"], 2),
    (["certify", "7", "3", "--left", "2", "1"], 2),
    (["autoeq", "3", "3", "1", "--symmetry", f"{data_dir}/singular.sym"], 2),
    (["tree", "20000001", "1"], 4),
]

failures = 0


def fail(argv, msg):
    global failures
    failures += 1
    print(f"FAIL {' '.join(argv)}: {msg}")


for argv, code in CASES:
    proc = subprocess.run([cli, *argv, "--json"], capture_output=True, text=True)
    if proc.returncode != code:
        fail(argv, f"exit {proc.returncode}, expected {code}")
        continue
    doc = json.loads(proc.stdout)
    errs = sorted(report.iter_errors(doc), key=str)
    if errs:
        fail(argv, errs[0].message)
    if json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n" != proc.stdout:
        fail(argv, "output is not canonical")

for argv, code in ERROR_CASES:
    proc = subprocess.run([cli, *argv, "--json"], capture_output=True, text=True)
    if proc.returncode != code:
        fail(argv, f"exit {proc.returncode}, expected {code}")
        continue
    if proc.stdout:
        fail(argv, "unexpected stdout on error")
    doc = json.loads(proc.stderr)
    errs = list(error.iter_errors(doc))
    if errs:
        fail(argv, errs[0].message)
    elif doc["exit_code"] != code:
        fail(argv, "exit_code field disagrees with process status")

total = len(CASES) + len(ERROR_CASES)
print(f"{total - failures}/{total} schema checks passed")
sys.exit(1 if failures else 0)
