#!/usr/bin/env python3
"""Validates the shipped JSON payloads against the schema files."""
import json
import pathlib
import subprocess
import sys

import jsonschema

root = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(".")
cli = sys.argv[2] if len(sys.argv) > 2 else "build/tools/tsde"

equation_schema = json.loads((root / "docs/schema/equation.schema.json").read_text())
census_schema = json.loads((root / "docs/schema/census.schema.json").read_text())

bad = 0
for path in sorted((root / "fixtures/paper").glob("*.json")):
    doc = json.loads(path.read_text())
    if doc.get("kind") != "equation":
        continue
    try:
        jsonschema.validate(doc["equation"], equation_schema)
    except jsonschema.ValidationError as e:
        print(f"INVALID {path}: {e.message}")
        bad += 1

out = subprocess.run(
    [cli, "census", "--rank", "3", "--max-vertices", "6", "--format", "json"],
    capture_output=True, text=True, check=True)
jsonschema.validate(json.loads(out.stdout), census_schema)

out = subprocess.run(
    [cli, "sde", "--rank", "3", "--graph", "g{D=3,k=2}[1,2|2,1|2,1]",
     "--alpha", "1", "--format", "json"],
    capture_output=True, text=True, check=True)
jsonschema.validate(json.loads(out.stdout), equation_schema)

print("schema validation ok" if bad == 0 else f"{bad} invalid payloads")
sys.exit(0 if bad == 0 else 1)
