"""Exhaustive cross-validation sweep over all labeled semigroups up to an order.

Runs every deciding method on every table and reports counts, per-method
timings, and any disagreements (there should never be any).

    python3 scripts/run_census.py --max-order 4 --threads 4
"""

import argparse
import json
import time

from pcskit import cross_validate, enumerate_semigroups


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    reports = []
    for order in range(1, args.max_order + 1):
        started = time.perf_counter()
        tables = list(enumerate_semigroups(order))
        rep = cross_validate(tables, spec=f"order {order} exhaustive",
                             threads=args.threads)
        elapsed = time.perf_counter() - started
        reports.append(rep.to_dict() | {"seconds": elapsed})
        if not args.json:
            print(f"order {order}: {rep.count_examined} tables, "
                  f"{rep.count_members} members, "
                  f"{len(rep.disagreements)} disagreements, "
                  f"{len(rep.failures)} failures, {elapsed:.1f}s")
        assert rep.ok, rep.disagreements or rep.failures
    if args.json:
        print(json.dumps(reports, indent=2))


if __name__ == "__main__":
    main()
