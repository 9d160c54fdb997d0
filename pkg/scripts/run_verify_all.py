#!/usr/bin/env python3
"""Run the full claim catalogue and write the JSON report.

Equivalent to `qcong verify-all --json reports/claims.json`, with a
summary grouped by counting sequence at the end.
"""

import argparse
import collections
import pathlib
import sys
import time

from qcong.claims import reports_to_json, run_catalogue


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", default="reports/claims.json")
    parser.add_argument("--filter", default=None)
    parser.add_argument("--exact", action="store_true",
                        help="verify in exact integer arithmetic")
    args = parser.parse_args()

    t0 = time.time()
    reports = run_catalogue(filter_substring=args.filter, exact=args.exact)
    elapsed = time.time() - t0

    by_spec = collections.Counter()
    for report in reports:
        print(report.line())
        by_spec[(report.params["spec"], report.status)] += 1

    out = pathlib.Path(args.json)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(reports_to_json(reports))

    print(f"\nwrote {out} ({len(reports)} claims in {elapsed:.1f}s)")
    specs = sorted({spec for spec, _ in by_spec})
    for spec in specs:
        line = ", ".join(
            f"{status}: {by_spec[(spec, status)]}"
            for status in ("pass", "fail", "skipped-hypothesis-false")
            if by_spec[(spec, status)]
        )
        print(f"  {spec}: {line}")
    return 1 if any(not r.ok for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
