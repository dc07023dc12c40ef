import numpy as np
import pytest

from src.errors import OutOfUniverseError
from src.groups.cayley import (element_orders, inverses, is_cyclic_table,
                               is_dihedral_table, multiplication_table)
from src.groups.descriptors import (TRIVIAL, GroupDescriptor, PolyhedralKind,
                                    group_order)

GROUPS = [
    TRIVIAL,
    GroupDescriptor.cyclic(6),
    GroupDescriptor.dihedral(5),
    GroupDescriptor.zxz(3, 3),
    GroupDescriptor.zxz_semi_z2(3, 3),
    GroupDescriptor.zxd(3, 5),
    GroupDescriptor.dxd(3, 3),
    GroupDescriptor.polyhedral(PolyhedralKind.A4),
    GroupDescriptor.polyhedral(PolyhedralKind.S4),
]


def _is_group_table(table):
    size = len(table)
    elements = np.arange(size)
    latin = all((np.sort(row) == elements).all() for row in table) and \
        all((np.sort(column) == elements).all() for column in table.T)
    identity = (table[0] == elements).all() and (table[:, 0] == elements).all()
    a, b, c = np.meshgrid(elements, elements, elements, indexing="ij")
    associative = (table[table[a, b], c] == table[a, table[b, c]]).all()
    return latin and identity and associative


@pytest.mark.parametrize("g", GROUPS, ids=str)
def test_tables_are_groups_of_the_right_order(g):
    table = multiplication_table(g)
    assert table.shape == (group_order(g), group_order(g))
    assert _is_group_table(table)


def test_element_orders_and_inverses():
    table = multiplication_table(GroupDescriptor.dihedral(4))
    orders = element_orders(table)
    assert sorted(orders.tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]
    inverse = inverses(table)
    assert (table[np.arange(8), inverse] == 0).all()


@pytest.mark.parametrize("kind, orders", [
    (PolyhedralKind.A4, {1, 2, 3}),
    (PolyhedralKind.S4, {1, 2, 3, 4}),
    (PolyhedralKind.A5, {1, 2, 3, 5}),
])
def test_polyhedral_element_orders(kind, orders):
    table = multiplication_table(GroupDescriptor.polyhedral(kind))
    assert set(element_orders(table).tolist()) == orders


def test_coprime_semidirect_product_is_dihedral():
    table = multiplication_table(GroupDescriptor.zxz_semi_z2(5, 7))
    assert len(table) == 70
    assert is_dihedral_table(table, 35)


def test_non_coprime_semidirect_product_is_not_dihedral():
    table = multiplication_table(GroupDescriptor.zxz_semi_z2(3, 9))
    assert not is_dihedral_table(table, 27)
    assert not is_dihedral_table(table, 3)


def test_cyclic_detection():
    assert is_cyclic_table(multiplication_table(GroupDescriptor.zxz(3, 5)))
    assert not is_cyclic_table(multiplication_table(GroupDescriptor.zxz(3, 3)))
    assert is_cyclic_table(multiplication_table(GroupDescriptor.zxd(5, 1)))


def test_dihedral_product_with_z2_factor():
    # D1 x D5 as presented is D10
    assert is_dihedral_table(multiplication_table(GroupDescriptor.dxd(1, 5)), 10)


def test_rejects_zero_parameters():
    with pytest.raises(OutOfUniverseError):
        multiplication_table(GroupDescriptor.cyclic(0))
