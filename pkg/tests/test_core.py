import pytest

from pcskit import build_semigroup, closure, cyclic_group, subsemigroup
from pcskit.core import (
    divides,
    green_classes,
    index_period,
    omega_power,
    principal_ideal,
)
from pcskit.errors import IndexOutOfRange, NotAssociative


def test_rejects_non_associative_table():
    # (0*0)*1 = 0 but 0*(0*1) = 1
    with pytest.raises(NotAssociative) as exc:
        build_semigroup([[1, 0], [0, 0]])
    assert exc.value.triple == (0, 0, 1)


def test_rejects_out_of_range_entry():
    with pytest.raises(IndexOutOfRange):
        build_semigroup([[0, 2], [0, 1]])


def test_idempotents_b2(b2):
    assert b2.idempotents == (0, 3, 4)


def test_index_period_cyclic():
    Z6 = cyclic_group(6)
    assert index_period(Z6, 1) == (1, 6)
    assert omega_power(Z6, 1) == 0
    assert omega_power(Z6, 1, 1) == 1
    assert omega_power(Z6, 1, 5) == 5


def test_index_period_nilpotent():
    # x*x = 0, 0*anything = 0: x has index 2, period 1
    N = build_semigroup([[0, 0], [0, 0]])
    assert index_period(N, 1) == (2, 1)
    assert omega_power(N, 1) == 0


def test_green_classes_b2(b2):
    g = b2.green
    assert list(g.r_class) == [0, 1, 2, 1, 2]
    assert list(g.l_class) == [0, 1, 2, 2, 1]
    assert list(g.j_class) == [0, 1, 1, 1, 1]
    assert list(g.h_class) == [0, 1, 2, 3, 4]


def test_green_h_is_r_meet_l(census_upto_4):
    for table in census_upto_4[3]:
        g = green_classes(build_semigroup(list(map(list, table))))
        pairs = set(zip(g.r_class, g.l_class))
        assert len(set(g.h_class)) == len(pairs)


def test_principal_ideals_rz2(rz2):
    assert principal_ideal(rz2, 0, "left").members == (0,)
    assert principal_ideal(rz2, 0, "right").members == (0, 1)


def test_subsemigroup_and_closure(b2):
    sub = subsemigroup(b2, [0, 3])
    assert sub.local.order == 2
    grown = closure(b2, [1, 2])
    assert set(grown.members) == {0, 1, 2, 3, 4}


def test_divides(rz2, rb22, z2):
    assert divides(rz2, rb22, cap=8).yes
    assert not divides(z2, rz2, cap=8).yes
    assert divides(z2, cyclic_group(4), cap=8).yes
