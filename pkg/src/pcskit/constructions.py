"""Constructors for the semigroups the toolkit manipulates.

Power semigroups, free constant bands, cyclic groups, Rees matrix semigroups
over groups, regular-representation images, direct products, and wreath
products over a right-zero base.
"""

from dataclasses import dataclass
from itertools import product

from .core import Semigroup, SubSemigroup, build_semigroup, green_classes, principal_ideal
from .errors import IndexOutOfRange, InvalidMatrix, NotAGroup, TooLarge


@dataclass(frozen=True)
class PowerSemigroup:
    base: Semigroup
    with_empty: bool
    result: Semigroup
    subset_of: tuple    # element index -> bit mask over base elements


def power_semigroup(S, with_empty=False, cap=12):
    """Non-empty subsets of S under set-wise multiplication.

    Subsets are ordered ascending by bit-mask value; with_empty prepends the
    empty set, which is absorbing.
    """
    n = S.order
    if n > cap:
        raise TooLarge(f"power semigroup of order-{n} base (cap {cap})")
    rows = S.rows
    bit = [1 << x for x in range(n)]
    full = (1 << n) - 1
    # row_prod[x][Y] = bit mask of {x*y : y in Y}, filled by dp over Y
    row_prod = []
    for x in range(n):
        rp = [0] * (full + 1)
        for m in range(1, full + 1):
            low = m & (-m)
            y = low.bit_length() - 1
            rp[m] = rp[m ^ low] | bit[rows[x][y]]
        row_prod.append(rp)

    masks = ([0] if with_empty else []) + list(range(1, full + 1))
    index_of = {m: i for i, m in enumerate(masks)}
    table = []
    for mx in masks:
        row = []
        for my in masks:
            if mx == 0 or my == 0:
                row.append(index_of[0])
                continue
            acc = 0
            rest = mx
            while rest:
                low = rest & (-rest)
                x = low.bit_length() - 1
                acc |= row_prod[x][my]
                rest ^= low
            row.append(index_of[acc])
        table.append(row)

    labels = []
    for m in masks:
        if m == 0:
            labels.append("{}")
        else:
            labels.append("{" + ",".join(S.label(x) for x in range(n) if m >> x & 1) + "}")
    result = Semigroup(table, labels=labels, validate=False)
    return PowerSemigroup(base=S, with_empty=with_empty,
                          result=result, subset_of=tuple(masks))


def free_constant_band(kind, m, k=None):
    """RZ(m): x*y=y; LZ(m): x*y=x; RB(m,k): (i,j)(p,q)=(i,q)."""
    if kind == "RZ":
        if m < 1:
            raise IndexOutOfRange("size must be >= 1")
        return Semigroup([[y for y in range(m)] for _ in range(m)], validate=False)
    if kind == "LZ":
        if m < 1:
            raise IndexOutOfRange("size must be >= 1")
        return Semigroup([[x for _ in range(m)] for x in range(m)], validate=False)
    if kind == "RB":
        if k is None:
            raise IndexOutOfRange("RB needs two size parameters")
        if m < 1 or k < 1:
            raise IndexOutOfRange("sizes must be >= 1")
        # element (i,j) -> i*k + j
        table = []
        for i in range(m):
            for j in range(k):
                row = []
                for p in range(m):
                    for q in range(k):
                        row.append(i * k + q)
                table.append(row)
        labels = [f"({i},{j})" for i in range(m) for j in range(k)]
        return Semigroup(table, labels=labels, validate=False)
    raise IndexOutOfRange(f"unknown band kind {kind!r}")


def cyclic_group(n):
    if n < 1:
        raise IndexOutOfRange("n must be >= 1")
    return Semigroup([[(i + j) % n for j in range(n)] for i in range(n)],
                     validate=False)


def _is_group(S):
    n = S.order
    full = set(range(n))
    for a in range(n):
        if set(S.rows[a]) != full:
            return False
        if {S.rows[x][a] for x in range(n)} != full:
            return False
    return True


def rees_matrix(G, i_size, lam_size, P):
    """Rees matrix semigroup M(G; I, Lambda; P), elements (i, g, lam).

    Product: (i,g,lam)(j,h,mu) = (i, g*P[lam][j]*h, mu).  The result is
    always completely simple (asserted).
    """
    if not _is_group(G):
        raise NotAGroup("Rees matrix structure group must be a group")
    if i_size < 1 or lam_size < 1:
        raise InvalidMatrix("I and Lambda sizes must be >= 1")
    if len(P) != lam_size or any(len(r) != i_size for r in P):
        raise InvalidMatrix("P must be a Lambda x I matrix")
    for r in P:
        for v in r:
            if not 0 <= int(v) < G.order:
                raise InvalidMatrix(f"P entry {v} not an element of G")
    ng = G.order
    rows = G.rows

    def idx(i, g, lam):
        return (i * ng + g) * lam_size + lam

    order = i_size * ng * lam_size
    table = [[0] * order for _ in range(order)]
    labels = [None] * order
    for i in range(i_size):
        for g in range(ng):
            for lam in range(lam_size):
                a = idx(i, g, lam)
                labels[a] = f"({i},{G.label(g)},{lam})"
                for j in range(i_size):
                    for h in range(ng):
                        for mu in range(lam_size):
                            v = rows[rows[g][int(P[lam][j])]][h]
                            table[a][idx(j, h, mu)] = idx(i, v, mu)
    S = Semigroup(table, labels=labels, validate=False)
    gd = green_classes(S)
    assert len(gd.j_reps) == 1, "Rees matrix output must be completely simple"
    return S


@dataclass(frozen=True)
class RegularRepresentation:
    base: Semigroup
    anchor: int
    side: str
    ideal: SubSemigroup
    image: Semigroup
    projection: tuple   # local ideal index -> image element


def regular_representation_image(S, a, side="right"):
    """Image of L(a) (resp. R(a)) under the right (left) regular representation.

    side="right": translations x -> x*s on L(a), deduplicated by their value
    vector, so the projection s -> rho_s need not be injective.
    """
    if side not in ("right", "left"):
        raise IndexOutOfRange(f"side must be right or left, got {side!r}")
    ideal = principal_ideal(S, a, "left" if side == "right" else "right")
    mem = ideal.members
    pos = {m: i for i, m in enumerate(mem)}
    rows = S.rows
    maps = []            # distinct value vectors, in order of first defining s
    map_index = {}
    projection = []
    for s in mem:
        if side == "right":
            vec = tuple(pos[rows[x][s]] for x in mem)
        else:
            vec = tuple(pos[rows[s][x]] for x in mem)
        if vec not in map_index:
            map_index[vec] = len(maps)
            maps.append(vec)
        projection.append(map_index[vec])
    k = len(maps)
    table = [[0] * k for _ in range(k)]
    for i, u in enumerate(maps):
        for j, v in enumerate(maps):
            if side == "right":
                # (rho_s rho_t)(x) = (x s) t
                comp = tuple(v[u[x]] for x in range(len(mem)))
            else:
                # (lam_s lam_t)(x) = s (t x)
                comp = tuple(u[v[x]] for x in range(len(mem)))
            table[i][j] = map_index[comp]
    image = Semigroup(table, validate=False)
    return RegularRepresentation(base=S, anchor=a, side=side,
                                 ideal=ideal, image=image,
                                 projection=tuple(projection))


def direct_product(S, T, cap=4096):
    if S.order * T.order > cap:
        raise TooLarge(f"direct product of order {S.order * T.order} (cap {cap})")
    ns, nt = S.order, T.order
    srows, trows = S.rows, T.rows
    table = []
    labels = []
    for a in range(ns):
        for x in range(nt):
            labels.append(f"({S.label(a)},{T.label(x)})")
            row = []
            for b in range(ns):
                for y in range(nt):
                    row.append(srows[a][b] * nt + trows[x][y])
            table.append(row)
    return Semigroup(table, labels=labels, validate=False)


def wreath_right_zero(W, m, extra_coordinate=False, cap=4096):
    """Wreath product of W with the right-zero semigroup on m points.

    Elements are pairs (f, t) with f a function from the coordinate set to W
    and t in RZ(m); product (f,t)(g,u) = (h,u) with h(c) = f(c)*g(t).  With
    extra_coordinate, one more function coordinate is added that is not a
    right-zero point.
    """
    if m < 1:
        raise IndexOutOfRange("m must be >= 1")
    coords = m + (1 if extra_coordinate else 0)
    nw = W.order
    if nw ** coords * m > cap:
        raise TooLarge(f"wreath product of order {nw ** coords * m} (cap {cap})")
    funcs = list(product(range(nw), repeat=coords))
    elems = [(f, t) for f in funcs for t in range(m)]
    index = {e: i for i, e in enumerate(elems)}
    rows = W.rows
    table = []
    for f, t in elems:
        row = []
        for g, u in elems:
            h = tuple(rows[f[c]][g[t]] for c in range(coords))
            row.append(index[(h, u)])
        table.append(row)
    return build_semigroup(table)
