"""Validates every JSON document the CLI emits against the shipped schemas with jsonschema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

ckf = sys.argv[1]
schema_dir = pathlib.Path(sys.argv[2])
schemas = {}
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    jsonschema.Draft7Validator.check_schema(doc)
    schemas[doc["$id"]] = doc


def run(*args, expect=0):
    proc = subprocess.run([ckf, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def check(doc):
    jsonschema.validate(doc, schemas[doc["schema"]])


documents = [
    run("verdict", "sl", "--n", "5", "--m", "3", "--field", "C", "--samples", "100", "--json"),
    run("verdict", "sl", "--n", "3", "--m", "2", "--field", "H", "--samples", "100", "--json"),
    run("verdict", "sl", "--n", "4", "--m", "3", "--field", "R", "--samples", "100", "--json"),
    run("verdict", "slso", "--p", "1", "--q", "3", "--samples", "100", "--json"),
    run("verdict", "levi", "--type", "D", "--rank", "4", "--remove", "1", "--json"),
    run("verdict", "levi", "--type", "BC", "--rank", "2", "--remove", "2", "--json"),
    run("epsilon-table", "--max-m", "12", "--json"),
    run("so-sequence", "--p", "1", "--q", "3", "--samples", "50", "--json"),
    run("decay", "--p", "2", "--q", "2", "--tmax", "5", "--variant", "compact", "--json"),
]
for text in documents:
    check(json.loads(text))

for line in run("mu-sample", "--family", "Uprime_so", "--p", "2", "--q", "3", "--samples", "5", "--json").splitlines():
    check(json.loads(line))

for fault in ("epsilon", "trace", "mu", "d"):
    check(json.loads(run("verify-paper", "--fast", "--inject-fault", fault, "--json", expect=1)))

run("verdict", "slso", "--p", "0", "--q", "3", expect=2)
print(f"validated {len(documents) + 10} documents against {len(schemas)} schemas")
