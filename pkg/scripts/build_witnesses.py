"""Full witness walkthrough for one semigroup given as a .sg file.

Prints the Green class structure, the per-method membership verdict, and,
for members, the explicit witness objects: the power semigroup, the
consolidation with its block-group check, and the division report.

    python3 scripts/build_witnesses.py examples/rz2.sg
"""

import argparse

from pcskit import (
    build_semigroup,
    consolidate,
    decide,
    division_witness,
    is_member,
    power_semigroup,
    verify_power_theorem,
)
from pcskit.cli import read_sg
from pcskit.errors import NotCompletelySimple, TooLarge


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file")
    ap.add_argument("--cap", type=int, default=10)
    args = ap.parse_args()

    table, labels = read_sg(args.file)
    S = build_semigroup(table, labels=labels)
    g = S.green
    print(f"order {S.order}, J classes: {max(g.j_class) + 1}, "
          f"idempotents: {len(S.idempotents)}")

    verdict = decide(S)
    print(f"member of the target pseudovariety: {verdict.member}")
    for m, (flag, w) in verdict.per_method.items():
        line = f"  {m}: {flag}"
        if w is not None:
            line += f"  witness {w}"
        print(line)

    try:
        P = power_semigroup(S, cap=args.cap)
        print(f"power semigroup order {P.result.order}")
    except TooLarge as exc:
        print(f"power semigroup skipped: {exc}")

    if not verdict.member:
        return

    cons = consolidate(S, cap=args.cap)
    bg = is_member(cons.result, "BG")
    print(f"consolidation order {cons.result.order}, block group: {bg.ok}")

    rep = division_witness(S, cap=args.cap)
    print(f"division: closure size {rep.closure_size}, "
          f"cover {list(rep.cover)}, ok: {rep.ok}")

    try:
        thm = verify_power_theorem(S, cap=args.cap)
        print(f"power theorem checks: ok={thm.ok}, "
              f"{thm.nonempty_preimages} nonempty preimages")
    except NotCompletelySimple:
        print("power theorem checks skipped: not completely simple")


if __name__ == "__main__":
    main()
