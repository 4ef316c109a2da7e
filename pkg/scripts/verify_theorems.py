#!/usr/bin/env python3
"""Run every registered theorem verification at its default desk-scale orders
and print one verdict block per claim.

Expect two honest violations, both genuine edge cases of the claims: the
connected-graph maximum at order 3 (K_3 ties the extremal tree P_3 at 7) and
the unicyclic maximum at order 8 (K_1*(K_3+2K_2) ties U_8 at 148).  Exit
status is 2 when any violation was found, matching the CLI convention.
"""

import argparse
import sys
import time

from dissoc.reports import THEOREMS, verify_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--skip", nargs="*", default=[], help="theorem ids to leave out"
    )
    args = parser.parse_args()

    any_violation = False
    for name in sorted(THEOREMS):
        if name in args.skip:
            continue
        start = time.monotonic()
        verdict = verify_theorem(name, jobs=args.jobs)
        elapsed = time.monotonic() - start
        print(f"== {name}  [{elapsed:.1f}s]")
        for n in verdict.orders:
            line = f"   order {n}: {verdict.status[n]}"
            if n in verdict.details:
                line += f"  ({verdict.details[n]})"
            print(line)
            for g6 in verdict.counterexamples.get(n, []):
                print(f"      counterexample: {g6}")
        any_violation |= not verdict.verified
    return 2 if any_violation else 0


if __name__ == "__main__":
    sys.exit(main())
