"""Semigroup populations and the all-methods cross-validation sweep.

Enumeration yields labeled Cayley tables; labeled counts (1, 8, 113, 3492
for orders 1..4) are the primary contract.  Optional dedup reduces to
canonical forms under element permutations.
"""

import random
import time

import numpy as np
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .core import Semigroup
from .errors import MethodDisagreement, TooLarge
from .pcs import METHODS, decide
from .varieties import is_member


def _enumerate_tables_python(n):
    size = n * n
    t = [-1] * size
    occ = [[] for _ in range(n)]    # occ[v] = filled cells (a,b) with a*b = v

    def triple_ok(a, b, c):
        ab = t[a * n + b]
        if ab < 0:
            return True
        bc = t[b * n + c]
        if bc < 0:
            return True
        left = t[ab * n + c]
        if left < 0:
            return True
        right = t[a * n + bc]
        if right < 0:
            return True
        return left == right

    def consistent(i, j):
        for k in range(n):
            if not triple_ok(i, j, k) or not triple_ok(k, i, j):
                return False
        for a, b in occ[i]:
            if not triple_ok(a, b, j):
                return False
        for b, c in occ[j]:
            if not triple_ok(i, b, c):
                return False
        return True

    def fill(pos):
        if pos == size:
            yield tuple(tuple(t[r * n:(r + 1) * n]) for r in range(n))
            return
        i, j = divmod(pos, n)
        for v in range(n):
            t[pos] = v
            occ[v].append((i, j))
            if consistent(i, j):
                yield from fill(pos + 1)
            occ[v].pop()
        t[pos] = -1

    yield from fill(0)


def _enumerate_tables_numba(n):
    flat = _numba_fill(n)
    for row in flat:
        yield tuple(tuple(int(v) for v in row[r * n:(r + 1) * n])
                    for r in range(n))


try:
    from numba import njit

    @njit(cache=True)
    def _numba_fill(n):    # pragma: no cover - exercised via enumerate_semigroups
        size = n * n
        t = np.full(size, -1, np.int8)
        occ_cell = np.empty((n, size), np.int32)
        occ_len = np.zeros(n, np.int32)
        trial = np.zeros(size, np.int8)
        results = []
        pos = 0
        while pos >= 0:
            if pos == size:
                results.append(t.copy())
                pos -= 1
                v = t[pos]
                occ_len[v] -= 1
                t[pos] = -1
                continue
            v = trial[pos]
            if v == n:
                trial[pos] = 0
                pos -= 1
                if pos >= 0:
                    u = t[pos]
                    occ_len[u] -= 1
                    t[pos] = -1
                continue
            trial[pos] = v + 1
            t[pos] = v
            occ_cell[v, occ_len[v]] = pos
            occ_len[v] += 1
            i = pos // n
            j = pos - i * n
            ok = True
            # triples (i,j,k) and (k,i,j) for all k, then triples whose outer
            # product cell is the newly filled one
            for k in range(n):
                for (a, b, c) in ((i, j, k), (k, i, j)):
                    ab = t[a * n + b]
                    if ab < 0:
                        continue
                    bc = t[b * n + c]
                    if bc < 0:
                        continue
                    left = t[ab * n + c]
                    if left < 0:
                        continue
                    right = t[a * n + bc]
                    if right < 0:
                        continue
                    if left != right:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                for q in range(occ_len[i]):
                    cell = occ_cell[i, q]
                    a = cell // n
                    b = cell - a * n
                    bc = t[b * n + j]
                    if bc < 0:
                        continue
                    left = t[i * n + j]
                    right = t[a * n + bc]
                    if right < 0:
                        continue
                    if left != right:
                        ok = False
                        break
            if ok:
                for q in range(occ_len[j]):
                    cell = occ_cell[j, q]
                    b = cell // n
                    c = cell - b * n
                    ab = t[i * n + b]
                    if ab < 0:
                        continue
                    left = t[ab * n + c]
                    if left < 0:
                        continue
                    right = t[i * n + j]
                    if left != right:
                        ok = False
                        break
            if ok:
                pos += 1
            else:
                occ_len[v] -= 1
                t[pos] = -1
        out = np.empty((len(results), size), np.int8)
        for r in range(len(results)):
            out[r] = results[r]
        return out

    _HAVE_NUMBA = True
except ImportError:    # pragma: no cover
    _HAVE_NUMBA = False


def enumerate_semigroups(order, dedup=False):
    """All associative order-n tables, each exactly once, by row-major
    backtracking with associativity propagation.  With dedup, only tables
    that are minimal among their permutation relabelings are yielded."""
    if order < 1:
        raise TooLarge("order must be >= 1")
    if order > 5:
        raise TooLarge(f"exhaustive enumeration capped at order 5, got {order}")
    if dedup and order > 4:
        raise TooLarge("dedup supported for order <= 4")
    if _HAVE_NUMBA and order >= 4:
        gen = _enumerate_tables_numba(order)
    else:
        gen = _enumerate_tables_python(order)
    if not dedup:
        yield from gen
        return
    perms = list(permutations(range(order)))
    for table in gen:
        if canonical_form(table, perms) == table:
            yield table


def canonical_form(table, perms=None):
    """Minimal relabeling of a table under all element permutations."""
    n = len(table)
    if perms is None:
        perms = list(permutations(range(n)))
    best = None
    for p in perms:
        inv = [0] * n
        for x, px in enumerate(p):
            inv[px] = x
        relabeled = tuple(
            tuple(p[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def transformation_semigroup(generators, cap=None):
    """Closure of explicit self-maps of {0..degree-1} under left-to-right
    composition ((f*g)(x) = g(f(x)))."""
    gens = {tuple(g) for g in generators}
    degree = len(next(iter(gens)))
    if cap is None:
        cap = degree ** degree

    def compose(f, g):
        return tuple(g[f[x]] for x in range(degree))

    members = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for f in frontier:
            for g in list(members):
                for h in (compose(f, g), compose(g, f)):
                    if h not in members:
                        if len(members) >= cap:
                            raise TooLarge(f"closure exceeds cap {cap}")
                        members.add(h)
                        new.append(h)
        frontier = new
    elems = sorted(members)
    pos = {f: i for i, f in enumerate(elems)}
    table = [[pos[compose(f, g)] for g in elems] for f in elems]
    labels = ["".join(map(str, f)) for f in elems]
    return Semigroup(table, labels=labels, validate=False)


def random_transformation_semigroup(degree, generator_count, seed, cap=None):
    """Closure of seeded-random self-maps of {0..degree-1}."""
    if degree < 1:
        raise TooLarge("degree must be >= 1")
    rng = random.Random(seed)
    gens = {
        tuple(rng.randrange(degree) for _ in range(degree))
        for _ in range(generator_count)
    }
    return transformation_semigroup(gens, cap=cap)


@dataclass(frozen=True)
class CensusReport:
    spec: str
    count_examined: int
    count_members: int
    disagreements: tuple
    failures: tuple
    method_seconds: dict

    @property
    def ok(self):
        return not self.disagreements and not self.failures

    def to_dict(self):
        return {
            "spec": self.spec,
            "count_examined": self.count_examined,
            "count_members": self.count_members,
            "disagreements": list(self.disagreements),
            "failures": list(self.failures),
            "method_seconds": {m: round(s, 6) for m, s in self.method_seconds.items()},
        }


def _examine(table):
    """One cross-validation unit: all methods, plus the CS/commutative
    containment assertions.  Returns a plain dict so it can cross process
    boundaries."""
    S = Semigroup(table, validate=False)
    timings = {}
    per_method = {}
    try:
        for m in METHODS:
            t0 = time.perf_counter()
            v = decide(S, methods=(m,))
            timings[m] = time.perf_counter() - t0
            per_method[m] = v.member
    except MethodDisagreement as exc:    # pragma: no cover - would be a bug
        return {"table": table, "disagreement": str(exc), "timings": timings}
    flags = set(per_method.values())
    out = {"table": table, "timings": timings}
    if len(flags) != 1:
        out["disagreement"] = per_method
        return out
    member = flags.pop()
    out["member"] = member
    if not member:
        if is_member(S, "CS").ok:
            out["failure"] = "completely simple semigroup rejected"
        elif S.is_commutative():
            out["failure"] = "commutative semigroup rejected"
    return out


def cross_validate(semigroups, spec="", threads=1):
    """Run every deciding method over a population and certify agreement.

    Disagreements and containment failures are collected (with the full
    table for replay), not raised, so the sweep always completes."""
    tables = [
        S.table_tuple() if isinstance(S, Semigroup) else tuple(map(tuple, S))
        for S in semigroups
    ]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_examine, tables, chunksize=64))
    else:
        results = [_examine(tb) for tb in tables]

    count_members = 0
    disagreements = []
    failures = []
    method_seconds = {m: 0.0 for m in METHODS}
    for res in results:
        for m, s in res["timings"].items():
            method_seconds[m] += s
        if "disagreement" in res:
            disagreements.append({"table": res["table"],
                                  "details": res["disagreement"]})
            continue
        if res["member"]:
            count_members += 1
        if "failure" in res:
            failures.append({"table": res["table"], "reason": res["failure"]})
    return CensusReport(
        spec=spec,
        count_examined=len(tables),
        count_members=count_members,
        disagreements=tuple(disagreements),
        failures=tuple(failures),
        method_seconds=method_seconds,
    )
