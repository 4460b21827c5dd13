"""Membership oracles for the basic pseudovarieties, plus the generic
Mal'cev-product-with-band and *RZ membership tests.

Structural characterizations used:

    T    trivial
    RZ   xy = y for all x, y
    LZ   xy = x
    RB   x^2 = x and xyx = x
    G    aS = Sa = S for every a
    CS   a single J-class (finite simple => completely simple)
    J    all J-classes are singletons
    ER   no pair of distinct idempotents e, f with ef = f and fe = e
    EL   dual
    BG   ER and EL

ER/EL detection scans idempotent pairs only: a two-element one-sided zero
subsemigroup necessarily consists of idempotents.
"""

from dataclasses import dataclass

from .constructions import regular_representation_image
from .core import principal_ideal, subsemigroup
from .errors import UnknownVariety


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def _idempotents(rows, members):
    return [x for x in members if rows[x][x] == x]


def _rz_pair(rows, members):
    """A non-trivial right-zero pair of idempotents in the subset, or None."""
    idems = _idempotents(rows, members)
    for i, e in enumerate(idems):
        for f in idems[i + 1:]:
            if rows[e][f] == f and rows[f][e] == e:
                return (e, f)
    return None


def _lz_pair(rows, members):
    idems = _idempotents(rows, members)
    for i, e in enumerate(idems):
        for f in idems[i + 1:]:
            if rows[e][f] == e and rows[f][e] == f:
                return (e, f)
    return None


def er_on_subset(rows, members):
    return _rz_pair(rows, members) is None


def el_on_subset(rows, members):
    return _lz_pair(rows, members) is None


def bg_on_subset(rows, members):
    return _rz_pair(rows, members) is None and _lz_pair(rows, members) is None


def _check_trivial(S):
    ok = S.order == 1
    return MembershipResult(ok, None if ok else 1)


def _check_rz(S):
    for x in range(S.order):
        for y in range(S.order):
            if S.rows[x][y] != y:
                return MembershipResult(False, (x, y))
    return MembershipResult(True)


def _check_lz(S):
    for x in range(S.order):
        for y in range(S.order):
            if S.rows[x][y] != x:
                return MembershipResult(False, (x, y))
    return MembershipResult(True)


def _check_rb(S):
    rows = S.rows
    for x in range(S.order):
        if rows[x][x] != x:
            return MembershipResult(False, (x,))
        for y in range(S.order):
            if rows[rows[x][y]][x] != x:
                return MembershipResult(False, (x, y))
    return MembershipResult(True)


def _check_group(S):
    n = S.order
    full = set(range(n))
    for a in range(n):
        if set(S.rows[a]) != full or {S.rows[x][a] for x in range(n)} != full:
            return MembershipResult(False, a)
    return MembershipResult(True)


def _check_cs(S):
    jc = S.green.j_class
    for x in range(S.order):
        if jc[x] != jc[0]:
            return MembershipResult(False, (0, x))
    return MembershipResult(True)


def _check_j_trivial(S):
    jc = S.green.j_class
    seen = {}
    for x in range(S.order):
        if jc[x] in seen:
            return MembershipResult(False, (seen[jc[x]], x))
        seen[jc[x]] = x
    return MembershipResult(True)


def _check_er(S):
    pair = _rz_pair(S.rows, range(S.order))
    return MembershipResult(pair is None, pair)


def _check_el(S):
    pair = _lz_pair(S.rows, range(S.order))
    return MembershipResult(pair is None, pair)


def _check_bg(S):
    r = _check_er(S)
    if not r.ok:
        return r
    return _check_el(S)


_ORACLES = {
    "T": _check_trivial,
    "RZ": _check_rz,
    "LZ": _check_lz,
    "RB": _check_rb,
    "G": _check_group,
    "CS": _check_cs,
    "J": _check_j_trivial,
    "ER": _check_er,
    "EL": _check_el,
    "BG": _check_bg,
}

VARIETY_NAMES = tuple(_ORACLES)


def is_member(S, variety):
    """Structural membership test; witness is the violating element/pair."""
    if variety not in _ORACLES:
        raise UnknownVariety(f"unknown variety {variety!r}; know {sorted(_ORACLES)}")
    return _ORACLES[variety](S)


def is_member_by_identity(S, variety):
    """Second engine for BG/ER/EL: exhaustive pseudoidentity checking."""
    from .terms import builtin, check

    names = {"BG": "bg", "ER": "er", "EL": "el"}
    if variety not in names:
        raise UnknownVariety(f"no pseudoidentity engine for {variety!r}")
    result = check(S, builtin(names[variety]))
    return MembershipResult(result.satisfied,
                            None if result.satisfied else result.assignment)


def bg_by_unique_inverses(S):
    """Third BG engine: every regular element has a unique inverse."""
    rows = S.rows
    n = S.order
    for x in range(n):
        inverses = [
            y for y in range(n)
            if rows[rows[x][y]][x] == x and rows[rows[y][x]][y] == y
        ]
        if len(inverses) > 1:
            return MembershipResult(False, (x, inverses[0], inverses[1]))
    return MembershipResult(True)


def _resolve(V):
    if isinstance(V, str):
        name = V
        return lambda S: is_member(S, name)
    return V


def malcev_with_band(V, S, kind):
    """Membership in V mal RB / V mal RZ / V mal LZ by the ideal criteria.

    RZ: every L(a) in V; LZ: every R(a) in V; RB: every {ab} u aSb (a != b)
    and every {a,a^2} u aSa in V.
    """
    oracle = _resolve(V)
    n = S.order
    rows = S.rows
    if kind == "RZ":
        for a in range(n):
            r = oracle(principal_ideal(S, a, "left").local)
            if not r.ok:
                return MembershipResult(False, ("L", a))
        return MembershipResult(True)
    if kind == "LZ":
        for a in range(n):
            r = oracle(principal_ideal(S, a, "right").local)
            if not r.ok:
                return MembershipResult(False, ("R", a))
        return MembershipResult(True)
    if kind == "RB":
        for a in range(n):
            for b in range(n):
                members = {rows[rows[a][s]][b] for s in range(n)}
                members.add(rows[a][b])
                if a == b:
                    members.add(a)
                sub = subsemigroup(S, members)
                if not oracle(sub.local).ok:
                    return MembershipResult(False, (a, b))
        return MembershipResult(True)
    raise UnknownVariety(f"band kind must be RZ, LZ or RB, got {kind!r}")


def star_rz_membership(V, S):
    """Membership in V * RZ for local V: every L(a)-image under the right
    regular representation must lie in V.  Locality of V is the caller's
    responsibility (BG is local)."""
    oracle = _resolve(V)
    for a in range(S.order):
        image = regular_representation_image(S, a, "right").image
        if not oracle(image).ok:
            return MembershipResult(False, a)
    return MembershipResult(True)
