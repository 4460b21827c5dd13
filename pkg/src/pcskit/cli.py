"""Command-line front end.

``.sg`` file format: optional ``#`` comment lines; first data line is the
order n; the next n data lines hold n whitespace-separated 0-based indices
(row i = left factor i); an optional final data line ``labels: s0 s1 ...``.

Exit codes: 0 = ran, membership true where applicable; 3 = ran, membership
false; 1 = usage error; 2 = invalid input; 4 = internal self-check failure.
"""

import argparse
import json
import sys
import time

from . import census as census_mod
from .constructions import power_semigroup, rees_matrix
from .core import build_semigroup, principal_ideal
from .errors import MethodDisagreement, PcskitError
from .pcs import (
    METHODS,
    consolidate,
    decide,
    division_witness,
    verify_power_theorem,
)
from .terms import check, format_term, parse, transform_star_rz
from .varieties import VARIETY_NAMES, is_member

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_MEMBER = 3
EXIT_SELF_CHECK = 4

JSON_SCHEMA = {
    "type": "object",
    "required": ["command", "input", "result", "witnesses", "timing"],
    "properties": {
        "command": {"type": "string"},
        "input": {"type": ["string", "null"]},
        "result": {},
        "witnesses": {"type": "array"},
        "timing": {
            "type": "object",
            "required": ["seconds"],
            "properties": {"seconds": {"type": "number"}},
        },
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def read_sg(path):
    """Parse a .sg file into (table, labels)."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise PcskitError(f"{path}: no data lines")
    try:
        n = int(data[0])
    except ValueError:
        raise PcskitError(f"{path}: first data line must be the order")
    if len(data) < n + 1:
        raise PcskitError(f"{path}: expected {n} table rows")
    table = []
    for ln in data[1:n + 1]:
        row = [int(v) for v in ln.split()]
        table.append(row)
    labels = None
    if len(data) > n + 1:
        extra = data[n + 1]
        if not extra.startswith("labels:"):
            raise PcskitError(f"{path}: unexpected trailing line {extra!r}")
        labels = extra[len("labels:"):].split()
    return table, labels


def write_sg(S, comment=None):
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(str(S.order))
    for row in S.rows:
        out.append(" ".join(str(v) for v in row))
    if S.labels:
        out.append("labels: " + " ".join(S.labels))
    return "\n".join(out) + "\n"


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _load(args):
    table, labels = read_sg(args.file)
    return build_semigroup(table, labels=labels)


def _cmd_check(args, out):
    S = _load(args)
    if args.variety == "pcs":
        methods = METHODS if args.method == "all" else (args.method,)
        verdict = decide(S, methods=methods)
        member = verdict.member
        out["result"] = {
            "variety": "pcs",
            "member": member,
            "methods": {
                m: {"flag": flag, "witness": _jsonable(w)}
                for m, (flag, w) in verdict.per_method.items()
            },
        }
        out["witnesses"] = [
            _jsonable(w) for _, w in verdict.per_method.values() if w is not None
        ]
        print_human(args, f"pcs member: {member}")
        for m, (flag, w) in verdict.per_method.items():
            print_human(args, f"  {m}: {flag}" + (f" witness={w}" if w else ""))
    else:
        r = is_member(S, args.variety)
        member = r.ok
        out["result"] = {"variety": args.variety, "member": member,
                         "witness": _jsonable(r.witness)}
        out["witnesses"] = [] if r.witness is None else [_jsonable(r.witness)]
        print_human(args, f"{args.variety} member: {member}"
                    + (f" witness={r.witness}" if r.witness is not None else ""))
    return EXIT_OK if member else EXIT_NOT_MEMBER


def _cmd_eval(args, out):
    pid = parse(args.id)
    if not hasattr(pid, "lhs"):
        raise PcskitError("--id must be a pseudoidentity (term = term)")
    S = _load(args)
    result = check(S, pid)
    out["result"] = {
        "identity": format_term(pid),
        "satisfied": result.satisfied,
        "counterexample": None if result.satisfied else {
            "assignment": result.assignment,
            "lhs": result.lhs_value,
            "rhs": result.rhs_value,
        },
    }
    out["witnesses"] = [] if result.satisfied else [_jsonable(result.assignment)]
    if result.satisfied:
        print_human(args, "satisfied")
    else:
        print_human(args, f"fails at {result.assignment}: "
                          f"{result.lhs_value} != {result.rhs_value}")
    return EXIT_OK if result.satisfied else EXIT_NOT_MEMBER


def _cmd_power(args, out):
    S = _load(args)
    P = power_semigroup(S, with_empty=args.with_empty, cap=args.cap or 12)
    out["result"] = {
        "order": P.result.order,
        "table": P.result.rows,
        "labels": list(P.result.labels),
        "subset_masks": list(P.subset_of),
    }
    print_human(args, write_sg(P.result, comment="power semigroup"), end="")
    return EXIT_OK


def _cmd_green(args, out):
    S = _load(args)
    g = S.green
    out["result"] = {
        "r_class": list(g.r_class), "l_class": list(g.l_class),
        "j_class": list(g.j_class), "h_class": list(g.h_class),
        "r_reps": list(g.r_reps), "l_reps": list(g.l_reps),
        "j_reps": list(g.j_reps), "h_reps": list(g.h_reps),
    }
    for name in ("r", "l", "j", "h"):
        print_human(args, f"{name.upper()}: {list(getattr(g, name + '_class'))}")
    return EXIT_OK


def _cmd_ideal(args, out):
    S = _load(args)
    sub = principal_ideal(S, args.element, args.side)
    out["result"] = {
        "members": list(sub.members),
        "order": len(sub.members),
        "table": sub.local.rows,
    }
    print_human(args, f"members: {list(sub.members)}")
    return EXIT_OK


def _parse_matrix(spec):
    rows = []
    for part in spec.split(";"):
        entries = part.replace(",", " ").split()
        rows.append([int(v) for v in entries])
    return rows


def _cmd_rees(args, out):
    table, labels = read_sg(args.group)
    G = build_semigroup(table, labels=labels)
    P = _parse_matrix(args.p)
    lam = len(P)
    isz = len(P[0]) if P else 0
    S = rees_matrix(G, isz, lam, P)
    out["result"] = {"order": S.order, "table": S.rows, "labels": list(S.labels)}
    print_human(args, write_sg(S, comment="Rees matrix semigroup"), end="")
    return EXIT_OK


def _cmd_consolidate(args, out):
    S = _load(args)
    cons = consolidate(S, cap=args.cap or 8)
    bg = is_member(cons.result, "BG").ok
    out["result"] = {
        "order": cons.result.order,
        "table": cons.result.rows,
        "labels": list(cons.result.labels),
        "block_group": bg,
    }
    print_human(args, write_sg(cons.result, comment="consolidation"), end="")
    print_human(args, f"block group: {bg}")
    return EXIT_OK


def _cmd_verify_theorem(args, out):
    S = _load(args)
    rep = verify_power_theorem(S, cap=args.cap or 6)
    out["result"] = {
        "ok": rep.ok,
        "triples_examined": rep.triples_examined,
        "nonempty_preimages": rep.nonempty_preimages,
        "preimage_sizes": list(rep.preimage_sizes),
        "closure_ok": rep.closure_ok,
        "j_trivial_ok": rep.j_trivial_ok,
        "idempotent_ok": rep.idempotent_ok,
    }
    out["witnesses"] = [_jsonable(f) for f in rep.failures]
    print_human(args, f"ok: {rep.ok} "
                      f"(nonempty preimages: {rep.nonempty_preimages})")
    return EXIT_OK if rep.ok else EXIT_SELF_CHECK


def _cmd_division(args, out):
    S = _load(args)
    rep = division_witness(S, cap=args.cap or 8)
    out["result"] = {
        "ok": rep.ok,
        "consolidation_order": rep.consolidation_order,
        "closure_size": rep.closure_size,
        "cover": list(rep.cover),
        "is_homomorphism": rep.is_homomorphism,
        "is_surjective": rep.is_surjective,
    }
    print_human(args, f"ok: {rep.ok} closure size: {rep.closure_size} "
                      f"cover: {list(rep.cover)}")
    return EXIT_OK if rep.ok else EXIT_SELF_CHECK


def _cmd_census(args, out):
    tables = list(census_mod.enumerate_semigroups(args.order, dedup=args.dedup))
    result = {"order": args.order, "dedup": args.dedup, "count": len(tables)}
    code = EXIT_OK
    if args.cross_validate:
        rep = census_mod.cross_validate(
            tables, spec=f"order {args.order} exhaustive",
            threads=args.threads or 1)
        result["report"] = rep.to_dict()
        if rep.disagreements or rep.failures:
            code = EXIT_SELF_CHECK
        print_human(args, f"count: {len(tables)} members: {rep.count_members} "
                          f"disagreements: {len(rep.disagreements)}")
    else:
        print_human(args, f"count: {len(tables)}")
    out["result"] = result
    return code


def _cmd_transform(args, out):
    pid = parse(args.id)
    if not hasattr(pid, "lhs"):
        raise PcskitError("--id must be a pseudoidentity (term = term)")
    derived = transform_star_rz(pid)
    texts = [format_term(p) for p in derived]
    out["result"] = {"identities": texts, "count": len(texts)}
    for t in texts:
        print_human(args, t)
    return EXIT_OK


def print_human(args, text, end="\n"):
    if not args.json:
        print(text, end=end)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit one JSON object on stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=None,
                        help="size cap for constructions")
    common.add_argument("--threads", type=int, default=None,
                        help="worker parallelism bound")

    parser = _Parser(prog="pcskit", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("check", parents=[common])
    p.add_argument("--variety", required=True,
                   choices=sorted(VARIETY_NAMES) + ["pcs"])
    p.add_argument("--method", default="all", choices=("all",) + METHODS)
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("eval", parents=[common])
    p.add_argument("--id", required=True, help="pseudoidentity 'term = term'")
    p.add_argument("file")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("power", parents=[common])
    p.add_argument("--with-empty", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("green", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("ideal", parents=[common])
    p.add_argument("--element", type=int, required=True)
    p.add_argument("--side", required=True, choices=("left", "right"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("rees", parents=[common])
    p.add_argument("--group", required=True, help=".sg file with the group")
    p.add_argument("--p", required=True,
                   help="sandwich matrix, rows ';'-separated, e.g. '0,0;0,1'")
    p.set_defaults(func=_cmd_rees)

    p = sub.add_parser("consolidate", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_consolidate)

    p = sub.add_parser("verify-theorem", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("division", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=_cmd_division)

    p = sub.add_parser("census", parents=[common])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--cross-validate", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("transform-star-rz", parents=[common])
    p.add_argument("--id", required=True)
    p.set_defaults(func=_cmd_transform)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not getattr(args, "func", None):
        print("usage error: a subcommand is required", file=sys.stderr)
        return EXIT_USAGE

    out = {
        "command": args.command,
        "input": getattr(args, "file", None) or getattr(args, "group", None),
        "result": None,
        "witnesses": [],
    }
    started = time.perf_counter()
    try:
        code = args.func(args, out)
    except MethodDisagreement as exc:
        print(f"self-check failure: {exc}", file=sys.stderr)
        return EXIT_SELF_CHECK
    except (PcskitError, OSError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    out["timing"] = {"seconds": time.perf_counter() - started}
    if args.json:
        json.dump(out, sys.stdout, indent=2, default=str)
        print()
    return code


if __name__ == "__main__":
    sys.exit(main())
