#!/usr/bin/env python3
# Copyright 2026 The kernelbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs the CLI end to end and validates its JSON output against docs/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    cli, report_schema_path = sys.argv[1], pathlib.Path(sys.argv[2])
    docs = report_schema_path.parent
    schemas = {p.name: json.loads(p.read_text()) for p in docs.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values())

    def validate(doc, name):
        schema = schemas[name]
        jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        subprocess.run([cli, "bench", "resolutions", "--frames", "2",
                        "--json", str(tmp / "r.json")], check=True, stdout=subprocess.DEVNULL)
        report = json.loads((tmp / "r.json").read_text())
        validate(report, "report.schema.json")
        assert [r["label"] for r in report["rows"]] == \
            ["320x240", "640x480", "1280x720", "1920x1080"], report["rows"]

        subprocess.run([cli, "bench", "operators", "--frames", "1", "--resolution", "32x24",
                        "--json", str(tmp / "o.json")], check=True, stdout=subprocess.DEVNULL)
        report = json.loads((tmp / "o.json").read_text())
        validate(report, "report.schema.json")
        assert [r["label"] for r in report["rows"]] == ["2", "10", "20", "50", "100", "500"]

        # Two separate processes must emit identical shader bytes.
        for stem in ("a", "b"):
            subprocess.run([cli, "gen-shader", "--kernel", "identity", "--out",
                            str(tmp / stem)], check=True)
        for ext in (".vert", ".frag"):
            assert (tmp / ("a" + ext)).read_bytes() == (tmp / ("b" + ext)).read_bytes(), ext
        validate(json.loads((tmp / "a.json").read_text()), "program.schema.json")

        raw = tmp / "clip.rgb"
        raw.write_bytes(bytes(range(256)) * (16 * 8 * 3 * 2 // 256))
        out = subprocess.run([cli, "pipeline", "--raw", str(raw), "--width", "16",
                              "--height", "8", "--op", "sobel", "--frames", "2"],
                             check=True, capture_output=True, text=True).stdout
        validate(json.loads(out), "run_report.schema.json")

        bad = subprocess.run([cli, "bench", "sideways"], capture_output=True)
        assert bad.returncode == 2, bad.returncode
    print("CLI JSON output matches the published schemas")
    return 0


if __name__ == "__main__":
    sys.exit(main())
