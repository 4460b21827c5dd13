import pytest

from pcskit import (
    build_semigroup,
    cyclic_group,
    direct_product,
    free_constant_band,
    is_member,
    power_semigroup,
    rees_matrix,
    regular_representation_image,
    transformation_semigroup,
    wreath_right_zero,
)
from pcskit.errors import NotAGroup, TooLarge


def test_power_semigroup_rz2(rz2):
    P = power_semigroup(rz2)
    assert P.result.order == 3
    assert P.result.rows == [[0, 1, 2], [0, 1, 2], [0, 1, 2]]
    assert list(P.result.labels) == ["{e}", "{f}", "{e,f}"]
    assert P.subset_of == (1, 2, 3)


def test_power_semigroup_with_empty(rz2):
    P = power_semigroup(rz2, with_empty=True)
    assert P.result.order == 4
    # empty set sits at index 0 and absorbs
    assert P.result.rows[0] == [0, 0, 0, 0]
    assert [row[0] for row in P.result.rows] == [0, 0, 0, 0]


def test_power_semigroup_cap(b2):
    with pytest.raises(TooLarge):
        power_semigroup(b2, cap=4)


def test_free_constant_bands():
    assert is_member(free_constant_band("RZ", 3), "RZ")
    assert is_member(free_constant_band("LZ", 3), "LZ")
    RB = free_constant_band("RB", 2, 3)
    assert RB.order == 6
    assert is_member(RB, "RB")
    assert not is_member(RB, "RZ")


def test_cyclic_group():
    for n in (1, 2, 5):
        G = cyclic_group(n)
        assert is_member(G, "G")
        assert G.is_commutative()


def test_rees_matrix_golden(z2):
    # 2x2 sandwich over Z2 with one twisted entry: completely simple,
    # neither a group nor a band
    S = rees_matrix(z2, 2, 2, [[0, 0], [0, 1]])
    assert S.order == 8
    assert is_member(S, "CS")
    assert not is_member(S, "G")
    assert not is_member(S, "RB")


def test_rees_matrix_rejects_non_group(rz2):
    with pytest.raises(NotAGroup):
        rees_matrix(rz2, 1, 1, [[0]])


def test_rees_matrix_trivial_sandwich_is_product(z3):
    S = rees_matrix(z3, 2, 1, [[0, 0]])
    assert S.order == 6
    assert is_member(S, "CS")


def test_regular_representation_rz2_mon(rz2_mon):
    # L(1) = {1}: its right regular representation is trivial
    R = regular_representation_image(rz2_mon, 1, "right")
    assert R.image.order == 1


def test_direct_product(z2, rz2):
    D = direct_product(z2, rz2)
    assert D.order == 4
    assert is_member(D, "CS")


def test_wreath_right_zero(z2):
    W = wreath_right_zero(z2, 2)
    assert W.order == 8
    W1 = wreath_right_zero(z2, 2, extra_coordinate=True)
    assert W1.order == 16


def test_transformation_semigroup_s3():
    S3 = transformation_semigroup([(1, 0, 2), (1, 2, 0)])
    assert S3.order == 6
    assert is_member(S3, "G")
    assert not S3.is_commutative()


def test_transformation_semigroup_constant_maps_give_rz():
    S = transformation_semigroup([(0, 0), (1, 1)])
    assert S.order == 2
    assert is_member(S, "RZ")
