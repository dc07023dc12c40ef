import random

import pytest

from src.errors import OutOfUniverseError
from src.groups.descriptors import (TRIVIAL, Family, GroupDescriptor,
                                    GroupList, PolyhedralKind, canonicalize,
                                    group_order, in_dmdm_universe,
                                    is_canonical)
from src.validation import random_descriptor

Z = GroupDescriptor.cyclic
D = GroupDescriptor.dihedral


@pytest.mark.parametrize("g, expected", [
    (GroupDescriptor.zxz(3, 5), Z(15)),
    (GroupDescriptor.zxz_semi_z2(5, 7), D(35)),
    (GroupDescriptor.zxz(9, 3), GroupDescriptor.zxz(3, 9)),
    (GroupDescriptor.zxz_semi_z2(9, 15), GroupDescriptor.zxz_semi_z2(3, 45)),
    (D(1), Z(2)),
    (Z(1), TRIVIAL),
    (GroupDescriptor.dxd(5, 3), GroupDescriptor.dxd(3, 5)),
    (GroupDescriptor.zxz(1, 7), Z(7)),
    (GroupDescriptor.zxz_semi_z2(1, 7), D(7)),
    (GroupDescriptor.zxz_semi_z2(1, 1), Z(2)),
    (GroupDescriptor.zxd(1, 5), D(5)),
    (GroupDescriptor.zxd(5, 1), Z(10)),
    (GroupDescriptor.dxd(1, 5), D(10)),
    (GroupDescriptor.zxd(7, 5), GroupDescriptor.zxd(7, 5)),
])
def test_canonicalize(g, expected):
    assert canonicalize(g) == expected
    assert canonicalize(expected) == expected


@pytest.mark.parametrize("g", [
    GroupDescriptor.zxz(4, 6),
    GroupDescriptor.zxd(3, 2),
    GroupDescriptor.dxd(0, 3),
    Z(0),
    D(-1),
])
def test_canonicalize_rejects_out_of_universe(g):
    with pytest.raises(OutOfUniverseError):
        canonicalize(g)
    assert not is_canonical(g)


def test_wrong_parameter_count():
    with pytest.raises(TypeError):
        GroupDescriptor(Family.CYCLIC, (3, 5))
    with pytest.raises(TypeError):
        GroupDescriptor(Family.CYCLIC, (3,), kind=PolyhedralKind.A4)


@pytest.mark.parametrize("g, order", [
    (Z(12), 12),
    (GroupDescriptor.zxz_semi_z2(3, 3), 18),
    (GroupDescriptor.dxd(3, 3), 36),
    (GroupDescriptor.zxd(5, 7), 70),
    (GroupDescriptor.polyhedral(PolyhedralKind.A5), 60),
    (TRIVIAL, 1),
])
def test_group_order(g, order):
    assert group_order(g) == order


def test_order_survives_canonicalize():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_descriptor(rng)
        assert group_order(canonicalize(g)) == group_order(g)
        assert canonicalize(canonicalize(g)) == canonicalize(g)


@pytest.mark.parametrize("g, expected", [
    (D(6), True),
    (Z(4), False),
    (GroupDescriptor.polyhedral(PolyhedralKind.S4), False),
    (Z(2), True),
    (D(2), True),
    (D(15), True),
    (D(20), False),
    (GroupDescriptor.zxz_semi_z2(3, 9), True),
    (TRIVIAL, True),
])
def test_in_dmdm_universe(g, expected):
    assert in_dmdm_universe(g) is expected


def test_group_list_sorts_and_dedupes():
    groups = [GroupDescriptor.dxd(3, 3), D(3), Z(5), GroupDescriptor.zxz(5, 3),
              GroupDescriptor.polyhedral(PolyhedralKind.A5), Z(2), D(1),
              GroupDescriptor.polyhedral(PolyhedralKind.A4), GroupDescriptor.zxd(3, 3)]
    listed = GroupList.from_groups(20, groups)
    assert listed.names() == ["A4", "A5", "Z2", "Z5", "Z15", "D3", "Z3xD3", "D3xD3"]
    assert D(1) in listed
    assert listed.of_family(Family.ZXD, Family.DXD) == (GroupDescriptor.zxd(3, 3), GroupDescriptor.dxd(3, 3))


def test_group_list_membership_ignores_out_of_universe_names():
    listed = GroupList.from_groups(9, [Z(2), GroupDescriptor.zxz(3, 3)])
    assert GroupDescriptor.zxz(2, 4) not in listed
    assert Z(0) not in listed
    assert GroupDescriptor.zxz(3, 3) in listed
