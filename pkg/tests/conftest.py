import pytest

from pcskit import (
    build_semigroup,
    cyclic_group,
    enumerate_semigroups,
    free_constant_band,
    rees_matrix,
)

# matrix-unit model of the 5-element Brandt semigroup:
# 0 = zero, 1 = a, 2 = b, 3 = ab, 4 = ba
B2_TABLE = [
    [0, 0, 0, 0, 0],
    [0, 0, 3, 0, 1],
    [0, 4, 0, 2, 0],
    [0, 1, 0, 3, 0],
    [0, 0, 2, 0, 4],
]

# two right zeros with an adjoined identity at index 0
RZ2_MON_TABLE = [[0, 1, 2], [1, 1, 2], [2, 1, 2]]


@pytest.fixture(scope="session")
def rz2():
    return build_semigroup([[0, 1], [0, 1]], labels=["e", "f"])


@pytest.fixture(scope="session")
def lz2():
    return build_semigroup([[0, 0], [1, 1]], labels=["e", "f"])


@pytest.fixture(scope="session")
def rz2_mon():
    return build_semigroup(RZ2_MON_TABLE)


@pytest.fixture(scope="session")
def b2():
    return build_semigroup(B2_TABLE)


@pytest.fixture(scope="session")
def rb22():
    return free_constant_band("RB", 2, 2)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def trivial():
    return build_semigroup([[0]])


@pytest.fixture(scope="session")
def census_upto_4():
    """All labeled associative tables of order 1..4, as tuples."""
    out = {}
    for n in range(1, 5):
        out[n] = list(enumerate_semigroups(n))
    return out


def rees_samples():
    """Completely simple Rees matrix samples over Z1..Z4, |I|,|lambda| <= 2,
    kept at order <= 6 so power semigroups stay small."""
    e = 0
    shapes = {
        1: [((1, 1), [[e]]), ((1, 2), [[e], [e]]),
            ((2, 1), [[e, e]]), ((2, 2), [[e, e], [e, e]])],
        2: [((1, 1), [[e]]), ((1, 2), [[e], [1]]), ((2, 1), [[e, 1]])],
        3: [((1, 1), [[e]]), ((1, 2), [[e], [2]])],
        4: [((1, 1), [[e]])],
    }
    out = []
    for ng, entries in shapes.items():
        G = cyclic_group(ng)
        for (isz, lsz), P in entries:
            out.append(rees_matrix(G, isz, lsz, P))
    return out
