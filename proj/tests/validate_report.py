"""Runs declab with --json and validates each report against the schema."""

import json
import subprocess
import sys

import jsonschema


def report(declab, *args):
    out = subprocess.run([declab, *args], capture_output=True, text=True)
    if out.returncode not in (0, 1, 2):
        sys.exit(f"{args}: exit {out.returncode}: {out.stderr}")
    return json.loads(out.stdout)


def main():
    declab, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    runs = [
        ["check", "counit", "comparison", "--space", "boundary(2)", "--levels", "2", "--json"],
        ["check", "unit-homology", "--space", "quotient(simplex(1), boundary(1))", "--degree", "1", "--json"],
        ["check", "split-uniqueness", "split-fork", "--space", "horn(2,1)", "--json"],
        ["check", "adjunction", "two-route-sigma", "--space", "simplex(1)", "--bispace", "dec_simplex(1)", "-N", "3", "--json"],
        ["suite", "acceptance", "--json"],
    ]
    for args in runs:
        first = report(declab, *args)
        jsonschema.validate(first, schema)
        if report(declab, *args) != first:
            sys.exit(f"{args}: report differs between runs")
        print("valid:", " ".join(args))
    bad = dict(first)
    bad["version"] = 2
    try:
        jsonschema.validate(bad, schema)
    except jsonschema.ValidationError:
        return
    sys.exit("schema accepted a wrong version")


if __name__ == "__main__":
    main()
