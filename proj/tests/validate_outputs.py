"""Schema and well-formedness checks on real CLI output.

usage: validate_outputs.py <tipforge binary> <schema> <golden dir>
"""
import json
import pathlib
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET

import jsonschema

SVG = "{http://www.w3.org/2000/svg}"


def main():
    binary, schema_path, golden_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    def check(doc, label):
        nonlocal failures
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"{label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)

    for golden in sorted(pathlib.Path(golden_dir).glob("*.json")):
        check(json.loads(golden.read_text()), golden.name)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        runs = {
            "analyze": ["analyze", "-2,4,1;1,-5,0;2,1,-3"],
            "sigma-point": ["sigma-point", "-1,2;2,-1"],
            "table1": ["table1", "--n-max", "5", "--format", "json"],
            "cycles": ["cycles", "-0+;+-0;0+-"],
            "signature": ["signature", "-++;--+;---", "--svg", str(tmp / "s.svg"), "--csv", str(tmp / "s.csv")],
            "census": ["census", "--n", "2", "--out", str(tmp / "census")],
        }
        for name, args in runs.items():
            out = subprocess.run([binary, *args], capture_output=True, text=True, check=True).stdout
            if name == "sigma-point":
                out = out.split("\n", 1)[1]
            if name == "census":
                out = (tmp / "census" / "census.json").read_text()
            doc = json.loads(out)
            check(doc, name)
            if name == "signature":
                root = ET.parse(tmp / "s.svg").getroot()
                markers = [c for c in root.iter(SVG + "circle") if c.get("class") == "marker"]
                if root.tag != SVG + "svg" or root.get("version") != "1.1":
                    print("svg: root element is not SVG 1.1")
                    failures += 1
                if len(markers) != len(doc["payload"]["spectrum"]):
                    print(f"svg: {len(markers)} markers for {len(doc['payload']['spectrum'])} eigenvalues")
                    failures += 1
                rows = (tmp / "s.csv").read_bytes().split(b"\r\n")
                if rows[0] != b"re,im" or len([r for r in rows[1:] if r]) != len(markers):
                    print("csv: unexpected layout")
                    failures += 1

        bad = subprocess.run([binary, "analyze", "1,2;2,-1"], capture_output=True, text=True)
        err = json.loads(bad.stderr)["error"]
        if bad.returncode != 4 or err["exit_code"] != 4 or err["kind"] != "NonNegativeDiagonal":
            print(f"error contract: exit {bad.returncode}, {err}")
            failures += 1

    print("ok" if failures == 0 else f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
