#!/usr/bin/env python3
"""Validate scenario files against the shipped JSON schema.

Usage: validate_scenarios.py SCHEMA [--expect-invalid] FILE...
"""
import json
import sys

import jsonschema


def main(argv):
    args = argv[1:]
    if not args:
        print(__doc__.strip(), file=sys.stderr)
        return 3
    schema_path = args.pop(0)
    expect_invalid = False
    if args and args[0] == "--expect-invalid":
        expect_invalid = True
        args.pop(0)

    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    bad = 0
    for path in args:
        try:
            with open(path) as f:
                doc = json.load(f)
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        except json.JSONDecodeError as e:
            errors = [e]
        if expect_invalid and not errors:
            print(f"{path}: accepted, but should be rejected")
            bad += 1
        elif not expect_invalid and errors:
            print(f"{path}: {errors[0].message}")
            bad += 1
        else:
            print(f"{path}: {'rejected' if expect_invalid else 'valid'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
