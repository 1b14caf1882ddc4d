"""Validate `semideg verify` JSON output against the report schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["theorem1", "-p", "5"],
    ["theorem2", "-p", "8", "--mode", "sampled", "--samples", "500"],
    ["theorem3", "-p", "5"],
    ["lemma4", "-p", "5"],
    ["oracles", "-p", "4"],
    ["pancyclic-sample", "-p", "10", "--samples", "50", "--mode", "sampled"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([cli, "verify", *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        reports = doc if isinstance(doc, list) else [doc]
        for report in reports:
            errors = list(validator.iter_errors(report))
            accounting = report["total_candidates"] == (
                report["conclusion_holds"] + sum(report["exceptions"].values()) + report["counterexample_total"]
            )
            if errors or not accounting:
                failures += 1
                for e in errors:
                    print(f"FAIL {' '.join(args)}: {e.message}")
                if not accounting:
                    print(f"FAIL {' '.join(args)}: counts do not add up")
            else:
                print(f"ok   {' '.join(args)} ({report['theorem']})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
