"""Runs every subcommand with --json and validates the output against its schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir, data = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

cases = [
    ["witt-laws", "--p", "2", "--m", "2"],
    ["witt-laws", "--p", "3", "--m", "3"],
    ["dominance", "--lhs", "2", "--rhs", "1,1"],
    ["dominance", "--lhs", "2,2,1", "--rhs", "3,1,1"],
    ["snf", "--matrix", data / "iso_3.txt"],
    ["snf", "--matrix", data / "iso_21.txt"],
    ["det", "--matrix", data / "iso_21.txt"],
    ["det", "--matrix", data / "iso_21.txt", "--chain", data / "chain_21.txt"],
    ["count", "--n", "3", "--c", "2", "--q", "2"],
    ["count", "--n", "3", "--c", "2", "--q", "2", "--type", "2,1"],
    ["count", "--n", "3", "--c", "2", "--q", "3", "--type", "2,1", "--leq"],
    ["demazure", "--n", "3", "--type", "2,1", "--q", "2"],
    ["demazure", "--n", "2", "--type", "1,1", "--q", "3", "--fibers"],
    ["tame", "--p", "5", "-a", "p^1*(2)", "-b", "p^0*(3)"],
    ["tame", "--p", "2", "--d", "2", "-a", "p^-1*(2)", "-b", "p^2*(3.1)"],
    ["cocycle", "--p", "3", "--n", "2", "--g", data / "torus_p.txt", "--h", data / "unipotent.txt"],
    ["cocycle", "--p", "3", "--n", "2", "--g", data / "torus_p.txt", "--h", data / "torus_unit.txt", "--check", "3"],
    ["--timing", "count", "--n", "2", "--c", "1", "--q", "2"],
]

schemas = {}
for path in schema_dir.glob("*.schema.json"):
    schema = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    schemas[path.name.removesuffix(".schema.json")] = schema

failures = 0
seen = set()
for args in cases:
    argv = [binary, "--json"] + [str(a) for a in args]
    run = subprocess.run(argv, capture_output=True, text=True)
    if run.returncode != 0:
        print(f"FAIL {' '.join(argv)}: exit {run.returncode}: {run.stderr.strip()}")
        failures += 1
        continue
    doc = json.loads(run.stdout)
    command = doc.get("command")
    seen.add(command)
    try:
        jsonschema.validate(doc, schemas[command], cls=jsonschema.Draft202012Validator)
        print(f"ok   {' '.join(str(a) for a in args)}")
    except (KeyError, jsonschema.ValidationError) as e:
        print(f"FAIL {' '.join(argv)}: {e}")
        failures += 1

missing = set(schemas) - seen
if missing:
    print(f"FAIL no case exercised: {sorted(missing)}")
    failures += 1
sys.exit(1 if failures else 0)
