"""Validates shipped configs and fresh wf reports against the docs schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

wf, root = sys.argv[1], pathlib.Path(sys.argv[2])
config_schema = json.loads((root / "docs/config-schema.json").read_text())
report_schema = json.loads((root / "docs/report-schema.json").read_text())

for cfg in sorted((root / "configs").glob("*.json")):
    jsonschema.validate(json.loads(cfg.read_text()), config_schema)

runs = [
    ("build", "example.json", None),
    ("gens", "example.json", "a5-3gen"),
    ("verify", "example.json", "a5-special"),
    ("iso", "example.json", None),
    ("bound", "example.json", "a5-single"),
    ("hypotheses", "example.json", "a5x2"),
    ("verify", "lab.json", None),
]
with tempfile.TemporaryDirectory() as tmp:
    for command, cfg, name in runs:
        out = pathlib.Path(tmp) / f"{command}.json"
        args = [wf, command, "--config", str(root / "configs" / cfg), "--json", str(out)]
        if name:
            args.append(name)
        code = subprocess.run(args, capture_output=True).returncode
        if code not in (0, 1):
            sys.exit(f"{command} on {cfg}: exit {code}")
        report = json.loads(out.read_text())
        jsonschema.validate(report, report_schema)
        # Reports round-trip through the serializer unchanged.
        assert json.loads(json.dumps(report)) == report
        print(f"{command} {cfg}: schema ok")
