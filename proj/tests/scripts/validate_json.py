"""Validate bbtool JSON output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

tool, schemas, data, work = (pathlib.Path(p) for p in sys.argv[1:5])
work.mkdir(parents=True, exist_ok=True)

registry = Registry()
loaded = {}
for path in schemas.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    loaded[path.name] = doc
    registry = registry.with_resource(path.name, Resource.from_contents(doc))


def check(schema_name, instance, label):
    validator = Draft202012Validator(loaded[schema_name], registry=registry)
    errors = sorted(validator.iter_errors(instance), key=lambda e: list(e.path))
    for e in errors:
        print(f"{label}: {list(e.path)}: {e.message}")
    return not errors


ok = True
for fixture in ["exam_fig.graph", "main_fig.graph", "favourable.graph", "octahedron.graph", "strip.graph"]:
    for style in ["dl", "ps"]:
        out = subprocess.run([tool, "presentation", data / fixture, "--style", style, "--format", "json"],
                             capture_output=True, text=True, check=True).stdout
        ok &= check("presentation.schema.json", json.loads(out), f"{fixture}/{style}")

for fixture, tree in [("main_fig.graph", None), ("example12.graph", None),
                      ("main_fig.graph", "v1-v2,v2-v4,v2-v3,v5-v4,v4-v6")]:
    target = work / (fixture + ".json")
    cmd = [tool, "decompose", data / fixture, "--json", target]
    if tree:
        cmd += ["--tree", tree]
    subprocess.run(cmd, capture_output=True, text=True, check=True)
    ok &= check("decomposition.schema.json", json.loads(target.read_text()), fixture)

print("schema validation", "passed" if ok else "FAILED")
sys.exit(0 if ok else 1)
