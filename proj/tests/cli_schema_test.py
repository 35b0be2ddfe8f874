"""Runs fsig-lab subcommands and validates reports against docs/schemas."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
RINGS = os.path.join(ROOT, "data", "rings")
SCHEMA = json.load(open(os.path.join(ROOT, "docs", "schemas", "fsig-lab.schema.json")))

CASES = [
    ("hk", ["--ring", "node.ring", "--ideal", "x,y", "--emax", "3"]),
    ("splitnum", ["--ring", "a1.ring", "--emax", "2"]),
    ("splitnum", ["--ring", "node.ring", "--emax", "2", "--route", "general"]),
    ("fsig", ["--ring", "a1.ring", "--emax", "2"]),
    ("fpure", ["--ring", "cusp.ring"]),
    ("sprime", ["--ring", "node.ring", "--emax", "3"]),
    ("sprime", ["--ring", "cusp.ring", "--emax", "2"]),
    ("ratio", ["--ring", "node.ring", "--emax", "3"]),
    ("gap", ["--ring", "node.ring", "--ideal", "x+y", "--ideal", "x,y", "--emax", "3"]),
    ("probe", ["--ring", "node.ring", "--emax", "2", "--eprime", "1", "--samples", "5", "--seed", "7"]),
    ("regular", ["--ring", "reg2.ring"]),
    ("oracle-check", []),
]


def validator(name):
    sub = dict(SCHEMA)
    sub.pop("oneOf")
    sub["$ref"] = "#/$defs/" + name
    return jsonschema.Draft202012Validator(sub)


def run(binary, args, env=None):
    full = [binary] + [os.path.join(RINGS, a) if a.endswith(".ring") else a for a in args]
    return subprocess.run(full, capture_output=True, text=True, env=env, cwd=ROOT)


def main():
    binary = sys.argv[1]
    failures = 0
    env = dict(os.environ)
    env.pop("FSIG_CACHE_DIR", None)
    for command, args in CASES:
        first = run(binary, [command] + args, env)
        if first.returncode != 0:
            print(f"FAIL {command}: exit {first.returncode}: {first.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator("command_" + command).iter_errors(json.loads(first.stdout)), key=str)
        for e in errors[:3]:
            print(f"FAIL {command}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        second = run(binary, [command] + args, env)
        if second.stdout != first.stdout:
            print(f"FAIL {command}: output differs between identical runs")
            failures += 1
        if command == "oracle-check":
            continue
        with tempfile.TemporaryDirectory() as cache_dir:
            cached = dict(env, FSIG_CACHE_DIR=cache_dir)
            cold = run(binary, [command] + args, cached)
            warm = run(binary, [command] + args, cached)
            if not os.listdir(cache_dir):
                print(f"FAIL {command}: nothing was cached")
                failures += 1
            if not (cold.stdout == warm.stdout == first.stdout):
                print(f"FAIL {command}: cold, warm and uncached reports differ")
                failures += 1

    err_check = validator("command_error")
    for args, code in [
        (["hk", "--ring", "node.ring"], 2),
        (["probe", "--ring", "node.ring"], 2),
        (["hk", "--ring", "node.ring", "--ideal", "x+"], 2),
        (["hk", "--ring", "node.ring", "--ideal", "x", "--emax", "3"], 1),
        (["regular", "--ring", "missing.ring"], 1),
        (["gap", "--ring", "node.ring", "--ideal", "x,y", "--ideal", "x+y"], 1),
    ]:
        r = run(binary, args, env)
        lines = r.stderr.strip().splitlines()
        if r.returncode != code or len(lines) != 1:
            print(f"FAIL {args}: exit {r.returncode}, stderr {r.stderr!r}")
            failures += 1
            continue
        errors = list(err_check.iter_errors(json.loads(lines[0])))
        if errors:
            print(f"FAIL {args}: error record {errors[0].message}")
            failures += 1

    print("schema checks:", "FAILED" if failures else "passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
