#!/usr/bin/env python3
"""Second-largest dissociation-count tier among trees and unicyclic graphs,
order by order, compared with the unicyclic maximum.

This reproduces the open-question exploration: from order 10 on, the second
tier should equal the unicyclic maximum and be achieved exactly by the two
candidate graphs (the triangle-hub extremal graph and its true-twin edge
deletion).  Evidence only; nothing here is a proof.
"""

import argparse
import json
import sys

from dissoc.reports import question_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-order", type=int, default=7)
    parser.add_argument("--max-order", type=int, default=13)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--no-cross-check", action="store_true",
        help="skip the exhaustive connected-graph comparison at orders <= 9",
    )
    args = parser.parse_args()

    reports = question_scan(
        range(args.min_order, args.max_order + 1),
        jobs=args.jobs,
        cross_check=not args.no_cross_check,
    )
    json.dump([r.to_dict() for r in reports], sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
