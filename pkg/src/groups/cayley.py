"""
Multiplication tables built from the standard presentations of each family.

Tables are square integer arrays indexed by element number; element 0 is
always the identity. They back the brute-force checks that canonical forms
really name isomorphic groups (for instance that (Z5xZ7):Z2 is D35 while
(Z3xZ9):Z2 is not dihedral at all).
"""
from functools import reduce
from typing import List, Tuple

import numpy as np
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from src.errors import OutOfUniverseError
from src.groups.descriptors import Family, GroupDescriptor, PolyhedralKind

# A block is a tuple of rotation moduli and whether a flip inverts all of them.
Block = Tuple[Tuple[int, ...], bool]


def _blocks(g: GroupDescriptor) -> List[Block]:
    family = g.family
    if family == Family.TRIVIAL:
        return []
    if family == Family.CYCLIC:
        return [((g.m,), False)]
    if family == Family.DIHEDRAL:
        return [((g.m,), True)]
    r, s = g.params
    if family == Family.ZXZ:
        return [((r,), False), ((s,), False)]
    if family == Family.ZXZ_SEMI_Z2:
        # phi rho = rho^-1 phi and phi sigma = sigma^-1 phi
        return [((r, s), True)]
    if family == Family.ZXD:
        return [((r,), False), ((s,), True)]
    return [((r,), True), ((s,), True)]


def _block_table(moduli: Tuple[int, ...], flip: bool) -> np.ndarray:
    rotations = np.array(list(np.ndindex(*moduli)), dtype=np.int64).reshape(-1, len(moduli))
    n_rotations = len(rotations)
    flips = np.repeat([0, 1] if flip else [0], n_rotations)
    coords = np.tile(rotations, (len(flips) // n_rotations, 1))

    # (a, e)(b, f) = (a + (-1)^e b, e + f)
    sign = np.where(flips == 1, -1, 1)[:, None, None]
    rot = (coords[:, None, :] + sign * coords[None, :, :]) % np.array(moduli)
    rot_index = np.ravel_multi_index(tuple(np.moveaxis(rot, -1, 0)), moduli)
    flip_index = (flips[:, None] + flips[None, :]) % 2
    return flip_index * n_rotations + rot_index


def _direct_product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    n_left, n_right = len(left), len(right)
    table = left[:, None, :, None] * n_right + right[None, :, None, :]
    return table.reshape(n_left * n_right, n_left * n_right)


def _polyhedral_table(kind: PolyhedralKind) -> np.ndarray:
    group = {PolyhedralKind.A4: lambda: AlternatingGroup(4),
             PolyhedralKind.S4: lambda: SymmetricGroup(4),
             PolyhedralKind.A5: lambda: AlternatingGroup(5)}[kind]()
    identity = group.identity
    elements = [identity] + sorted((p for p in group.elements if p != identity),
                                   key=lambda p: p.array_form)
    index = {p: i for i, p in enumerate(elements)}
    table = np.empty((len(elements), len(elements)), dtype=np.int64)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            table[i, j] = index[p * q]
    return table


def multiplication_table(g: GroupDescriptor) -> np.ndarray:
    """Cayley table of `g` as presented, without canonicalizing first."""
    if any(p < 1 for p in g.params):
        raise OutOfUniverseError(f"{g.family.name}{g.params}: parameters must be at least 1")
    if g.family == Family.POLYHEDRAL:
        return _polyhedral_table(g.kind)
    tables = [_block_table(moduli, flip) for moduli, flip in _blocks(g)]
    return reduce(_direct_product, tables, np.zeros((1, 1), dtype=np.int64))


def element_orders(table: np.ndarray) -> np.ndarray:
    size = len(table)
    elements = np.arange(size)
    orders = np.zeros(size, dtype=np.int64)
    power = elements.copy()
    for k in range(1, size + 1):
        orders[(power == 0) & (orders == 0)] = k
        if orders.all():
            break
        power = table[power, elements]
    return orders


def inverses(table: np.ndarray) -> np.ndarray:
    return np.argmax(table == 0, axis=1)


def is_cyclic_table(table: np.ndarray) -> bool:
    return bool((element_orders(table) == len(table)).any())


def is_dihedral_table(table: np.ndarray, k: int) -> bool:
    """Whether the table is isomorphic to D_k.

    A group of order 2k containing a of order k and an involution b outside
    <a> with bab = a^-1 is generated by them and satisfies the dihedral
    relations, so it is D_k."""
    if len(table) != 2 * k:
        return False
    orders = element_orders(table)
    inverse = inverses(table)
    involutions = np.flatnonzero(orders == 2)
    for a in np.flatnonzero(orders == k):
        subgroup = {0}
        power = a
        while power != 0:
            subgroup.add(int(power))
            power = table[power, a]
        for b in involutions:
            if int(b) not in subgroup and table[table[b, a], b] == inverse[a]:
                return True
    return False
