"""Finite semigroups as Cayley tables, and the primitive algebra on them.

Convention: elements are 0-based indices and ``table[i][j]`` is the product
i*j (left factor = row).  The adjoined identity of S^1 is virtual: ideal and
Green computations treat it implicitly instead of materializing an element.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import IndexOutOfRange, NotAssociative


@dataclass(frozen=True)
class OmegaRecord:
    """Index/period data of one element: x^(index+period) = x^index.

    ``cycle[r]`` is x^omega * x^r for r in [0, period), so cycle[0] is the
    unique idempotent power of x.
    """

    index: int
    period: int
    cycle: tuple


@dataclass(frozen=True)
class GreenData:
    r_class: tuple
    l_class: tuple
    j_class: tuple
    h_class: tuple
    r_reps: tuple
    l_reps: tuple
    j_reps: tuple
    h_reps: tuple


class Semigroup:
    """Immutable finite semigroup on {0..n-1}.

    Use :func:`build_semigroup` to construct with validation; the constructor
    itself assumes the table is associative when ``validate=False``.
    """

    def __init__(self, table, labels=None, validate=True):
        rows = [list(map(int, r)) for r in table]
        n = len(rows)
        if n < 1:
            raise IndexOutOfRange("empty table")
        for r in rows:
            if len(r) != n:
                raise IndexOutOfRange("table is not square")
            for v in r:
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"entry {v} outside [0,{n})")
        self.order = n
        self.rows = rows
        self.table = np.array(rows, dtype=np.int32)
        self.table.setflags(write=False)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise IndexOutOfRange("label count != order")
        if validate:
            self._check_associative()
        self.idempotent_set = tuple(rows[x][x] == x for x in range(n))
        self.idempotents = tuple(x for x in range(n) if rows[x][x] == x)
        self.omega_cache = tuple(self._omega_record(x) for x in range(n))
        self._green = None
        self._omega_maps = {}

    def _check_associative(self):
        # chunked over the left factor to keep memory at O(n^2)
        t = self.table
        for i in range(self.order):
            left = t[t[i], :]       # left[j,k] = t[t[i,j], k]
            right = t[i][t]         # right[j,k] = t[i, t[j,k]]
            bad = np.argwhere(left != right)
            if len(bad):
                j, k = map(int, bad[0])
                raise NotAssociative(i, j, k)

    def _omega_record(self, x):
        rows = self.rows
        seen = {x: 1}
        powers = [x]
        cur = x
        k = 1
        while True:
            cur = rows[cur][x]
            k += 1
            if cur in seen:
                index = seen[cur]
                period = k - index
                break
            seen[cur] = k
            powers.append(cur)
        # idempotent power: x^m with m >= index, m = 0 mod period
        m = period * (-(-index // period))
        omega = powers[m - 1]
        cycle = [omega]
        for _ in range(period - 1):
            cycle.append(rows[cycle[-1]][x])
        return OmegaRecord(index, period, tuple(cycle))

    def mul(self, x, y):
        return self.rows[x][y]

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    @property
    def green(self):
        if self._green is None:
            self._green = green_classes(self)
        return self._green

    def omega_map(self, k):
        """Vector mapping each element x to x^(omega+k)."""
        if k not in self._omega_maps:
            vec = np.array(
                [rec.cycle[k % rec.period] for rec in self.omega_cache],
                dtype=np.int32,
            )
            vec.setflags(write=False)
            self._omega_maps[k] = vec
        return self._omega_maps[k]

    def is_commutative(self):
        return bool(np.array_equal(self.table, self.table.T))

    def table_tuple(self):
        return tuple(tuple(r) for r in self.rows)

    def __repr__(self):
        return f"Semigroup(order={self.order})"


@dataclass(frozen=True)
class SubSemigroup:
    parent: Semigroup
    members: tuple          # sorted parent indices
    local: Semigroup        # re-indexed Cayley table
    to_parent: tuple        # local index -> parent index

    def __len__(self):
        return len(self.members)


def build_semigroup(table, labels=None):
    """Validate a Cayley table and return the populated Semigroup."""
    return Semigroup(table, labels=labels, validate=True)


def subsemigroup(S, members):
    """Wrap a multiplication-closed subset of S as a SubSemigroup."""
    mem = sorted(set(int(m) for m in members))
    for m in mem:
        if not 0 <= m < S.order:
            raise IndexOutOfRange(f"element {m} not in S")
    pos = {m: i for i, m in enumerate(mem)}
    rows = S.rows
    local = []
    for a in mem:
        row = []
        for b in mem:
            p = rows[a][b]
            if p not in pos:
                raise IndexOutOfRange(f"subset not closed: {a}*{b}={p}")
            row.append(pos[p])
        local.append(row)
    labels = [S.label(m) for m in mem] if S.labels else None
    return SubSemigroup(
        parent=S,
        members=tuple(mem),
        local=Semigroup(local, labels=labels, validate=False),
        to_parent=tuple(mem),
    )


def closure(S, gens):
    """Smallest subset of S containing gens and closed under the table."""
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise IndexOutOfRange("empty generating set")
    for g in gens:
        if not 0 <= g < S.order:
            raise IndexOutOfRange(f"generator {g} not in S")
    rows = S.rows
    members = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for a in frontier:
            for b in list(members):
                for p in (rows[a][b], rows[b][a]):
                    if p not in members:
                        members.add(p)
                        new.append(p)
        frontier = new
    return subsemigroup(S, members)


def index_period(S, x):
    rec = S.omega_cache[x]
    return rec.index, rec.period


def omega_power(S, x, k=0):
    """x^(omega+k), with k normalized mod the period of x."""
    rec = S.omega_cache[x]
    return rec.cycle[k % rec.period]


def _partition_ids(keys):
    """Deterministic class ids, ordered by smallest member."""
    ids = {}
    out = []
    reps = []
    for x, key in enumerate(keys):
        if key not in ids:
            ids[key] = len(reps)
            reps.append(x)
        out.append(ids[key])
    return tuple(out), tuple(reps)


def green_classes(S):
    n = S.order
    t = S.table
    right = []
    left = []
    two = []
    for x in range(n):
        xs = frozenset(t[x, :].tolist()) | {x}
        sx = frozenset(t[:, x].tolist()) | {x}
        sxs = frozenset(np.unique(t[:, t[x, :]]).tolist())
        right.append(xs)
        left.append(sx)
        two.append(xs | sx | sxs)
    r_class, r_reps = _partition_ids(right)
    l_class, l_reps = _partition_ids(left)
    j_class, j_reps = _partition_ids(two)
    h_class, h_reps = _partition_ids(list(zip(r_class, l_class)))
    return GreenData(r_class, l_class, j_class, h_class,
                     r_reps, l_reps, j_reps, h_reps)


def principal_ideal(S, a, side):
    """L(a) = Sa u {a} or R(a) = aS u {a}, as a SubSemigroup."""
    if side not in ("left", "right"):
        raise IndexOutOfRange(f"side must be left or right, got {side!r}")
    if not 0 <= a < S.order:
        raise IndexOutOfRange(f"element {a} not in S")
    t = S.table
    if side == "left":
        members = set(t[:, a].tolist()) | {a}
    else:
        members = set(t[a, :].tolist()) | {a}
    return subsemigroup(S, members)


@dataclass(frozen=True)
class DivisionAnswer:
    status: str                 # "yes" | "no" | "too-large"
    sub_members: tuple = None   # subset of T (parent indices)
    mapping: dict = None        # parent index of T -> element of S

    @property
    def yes(self):
        return self.status == "yes"


def _all_subsemigroup_sets(T):
    """All multiplication-closed non-empty subsets of T.

    Enumerates closures of generator subsets with memoization; exponential,
    intended for desk-scale T only.
    """
    rows = T.rows
    n = T.order
    close_memo = {}

    def close(fs):
        if fs in close_memo:
            return close_memo[fs]
        members = set(fs)
        frontier = list(fs)
        while frontier:
            new = []
            for a in frontier:
                for b in list(members):
                    for p in (rows[a][b], rows[b][a]):
                        if p not in members:
                            members.add(p)
                            new.append(p)
            frontier = new
        out = frozenset(members)
        close_memo[fs] = out
        return out

    found = set()
    for size in range(1, n + 1):
        from itertools import combinations
        for gens in combinations(range(n), size):
            found.add(close(frozenset(gens)))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _greedy_generators(S):
    """A small generating set of S, found greedily."""
    rows = S.rows
    gens = []
    have = set()
    for x in range(S.order):
        if x in have:
            continue
        gens.append(x)
        have.add(x)
        frontier = [x]
        while frontier:
            new = []
            for a in frontier:
                for b in list(have):
                    for p in (rows[a][b], rows[b][a]):
                        if p not in have:
                            have.add(p)
                            new.append(p)
            frontier = new
    return gens


def _surjection_search(U, S):
    """A surjective homomorphism from the Semigroup U onto S, or None.

    Backtracks over images of a greedy generating set of U, extending each
    candidate by word closure.
    """
    gens = _greedy_generators(U)
    urows = U.rows
    srows = S.rows
    target = set(range(S.order))

    def extend(images):
        hom = {}
        for g, img in zip(gens, images):
            if g in hom and hom[g] != img:
                return None
            hom[g] = img
        frontier = list(hom)
        while frontier:
            new = []
            for a in frontier:
                for b in list(hom):
                    for x, y in ((a, b), (b, a)):
                        p = urows[x][y]
                        q = srows[hom[x]][hom[y]]
                        if p in hom:
                            if hom[p] != q:
                                return None
                        else:
                            hom[p] = q
                            new.append(p)
            frontier = new
        return hom

    for images in product(range(S.order), repeat=len(gens)):
        hom = extend(images)
        if hom is not None and set(hom.values()) == target:
            return hom
    return None


def divides(S, T, cap=12):
    """Does S divide T (homomorphic image of a subsemigroup)?

    Exhaustive bounded search; returns TooLarge above the cap instead of
    guessing.
    """
    if T.order > cap:
        return DivisionAnswer(status="too-large")
    for members in _all_subsemigroup_sets(T):
        if len(members) < S.order:
            continue
        sub = subsemigroup(T, members)
        hom = _surjection_search(sub.local, S)
        if hom is not None:
            mapping = {sub.to_parent[u]: v for u, v in hom.items()}
            return DivisionAnswer(status="yes",
                                  sub_members=sub.members,
                                  mapping=mapping)
    return DivisionAnswer(status="no")
