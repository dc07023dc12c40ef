"""
==================
Group descriptors
==================

Symbolic names for the finite groups that can appear as orientation preserving
topological symmetry groups of complete graphs: the trivial group, cyclic and
dihedral groups, the polyhedral groups A4, S4 and A5, and the four product
families built from odd cyclic and dihedral factors.

A descriptor is only a name. :func:`canonicalize` maps every well-formed
descriptor onto the unique representative of its isomorphism class, and all
other operations in the package expect canonical input.

**Classes**
    :class Family:
    :class PolyhedralKind:
    :class GroupDescriptor:
    :class GroupList:

"""
__docformat__ = 'reStructuredText'

from dataclasses import dataclass, field
from enum import IntEnum
from math import gcd
from typing import Iterable, Optional, Tuple

from src.errors import OutOfUniverseError


class Family(IntEnum):
    # Values give the sort order of enumeration output.
    TRIVIAL = 0
    POLYHEDRAL = 1
    CYCLIC = 2
    DIHEDRAL = 3
    ZXZ = 4
    ZXZ_SEMI_Z2 = 5
    ZXD = 6
    DXD = 7

    @property
    def label(self) -> str:
        return self.name.lower()


class PolyhedralKind(IntEnum):
    # Value is the group order.
    A4 = 12
    S4 = 24
    A5 = 60


PRODUCT_FAMILIES = (Family.ZXZ, Family.ZXZ_SEMI_Z2, Family.ZXD, Family.DXD)

_PARAMETER_COUNT = {
    Family.TRIVIAL: 0,
    Family.POLYHEDRAL: 0,
    Family.CYCLIC: 1,
    Family.DIHEDRAL: 1,
    Family.ZXZ: 2,
    Family.ZXZ_SEMI_Z2: 2,
    Family.ZXD: 2,
    Family.DXD: 2,
}


@dataclass(frozen=True)
class GroupDescriptor:
    family: Family
    params: Tuple[int, ...] = ()
    kind: Optional[PolyhedralKind] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if len(self.params) != _PARAMETER_COUNT[self.family]:
            raise TypeError(f"{self.family.name} takes {_PARAMETER_COUNT[self.family]} parameters, "
                            f"got {self.params}")
        if (self.family == Family.POLYHEDRAL) != (self.kind is not None):
            raise TypeError("kind must be given exactly for POLYHEDRAL descriptors")
        if self.kind is not None:
            object.__setattr__(self, "kind", PolyhedralKind(self.kind))

    @classmethod
    def trivial(cls) -> "GroupDescriptor":
        return cls(Family.TRIVIAL)

    @classmethod
    def polyhedral(cls, kind: PolyhedralKind) -> "GroupDescriptor":
        return cls(Family.POLYHEDRAL, kind=kind)

    @classmethod
    def cyclic(cls, m: int) -> "GroupDescriptor":
        return cls(Family.CYCLIC, (m,))

    @classmethod
    def dihedral(cls, m: int) -> "GroupDescriptor":
        return cls(Family.DIHEDRAL, (m,))

    @classmethod
    def zxz(cls, r: int, s: int) -> "GroupDescriptor":
        return cls(Family.ZXZ, (r, s))

    @classmethod
    def zxz_semi_z2(cls, r: int, s: int) -> "GroupDescriptor":
        return cls(Family.ZXZ_SEMI_Z2, (r, s))

    @classmethod
    def zxd(cls, r: int, s: int) -> "GroupDescriptor":
        return cls(Family.ZXD, (r, s))

    @classmethod
    def dxd(cls, r: int, s: int) -> "GroupDescriptor":
        return cls(Family.DXD, (r, s))

    @property
    def m(self) -> int:
        if self.family not in (Family.CYCLIC, Family.DIHEDRAL):
            raise AttributeError(f"{self.family.name} descriptors have no parameter m")
        return self.params[0]

    @property
    def sort_key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (int(self.family), int(self.kind or 0), self.params)

    def __str__(self) -> str:
        from src.groups.naming import display_name
        return display_name(self)


TRIVIAL = GroupDescriptor.trivial()


def _check_parameters(g: GroupDescriptor) -> None:
    for p in g.params:
        if p < 1:
            raise OutOfUniverseError(f"{g.family.name}{g.params}: parameters must be at least 1, got {p}")
    if g.family in PRODUCT_FAMILIES and any(p % 2 == 0 for p in g.params):
        raise OutOfUniverseError(f"{g.family.name}{g.params}: product families only take odd parameters")


def canonicalize(g: GroupDescriptor) -> GroupDescriptor:
    """Returns the canonical representative of the isomorphism class of `g`.

    Products of cyclic groups are rewritten as Z_gcd x Z_lcm, which collapses
    to a cyclic (or, with the Z2 extension, dihedral) group when the factors
    are coprime. Factors of order one are dropped and D1 becomes Z2."""
    _check_parameters(g)
    family = g.family

    if family == Family.CYCLIC:
        return TRIVIAL if g.m == 1 else g

    if family == Family.DIHEDRAL:
        return GroupDescriptor.cyclic(2) if g.m == 1 else g

    if family in (Family.ZXZ, Family.ZXZ_SEMI_Z2):
        r, s = g.params
        d = gcd(r, s)
        if d == 1:
            if family == Family.ZXZ:
                return canonicalize(GroupDescriptor.cyclic(r * s))
            return canonicalize(GroupDescriptor.dihedral(r * s))
        return GroupDescriptor(family, (d, r * s // d))

    if family == Family.ZXD:
        r, s = g.params
        if r == 1:
            return canonicalize(GroupDescriptor.dihedral(s))
        if s == 1:
            # Z_r x Z_2 with r odd
            return GroupDescriptor.cyclic(2 * r)
        return g

    if family == Family.DXD:
        r, s = sorted(g.params)
        if r == 1:
            # Z_2 x D_s is D_2s for odd s
            return GroupDescriptor.dihedral(2 * s)
        return GroupDescriptor(Family.DXD, (r, s))

    return g


def is_canonical(g: GroupDescriptor) -> bool:
    try:
        return canonicalize(g) == g
    except OutOfUniverseError:
        return False


def group_order(g: GroupDescriptor) -> int:
    family = g.family
    if family == Family.TRIVIAL:
        return 1
    if family == Family.POLYHEDRAL:
        return int(g.kind)
    if family == Family.CYCLIC:
        return g.m
    if family == Family.DIHEDRAL:
        return 2 * g.m
    r, s = g.params
    if family == Family.ZXZ:
        return r * s
    if family in (Family.ZXZ_SEMI_Z2, Family.ZXD):
        return 2 * r * s
    return 4 * r * s


def in_dmdm_universe(g: GroupDescriptor) -> bool:
    """Whether `g` is isomorphic to a subgroup of D_m x D_m for some odd m."""
    if g.family == Family.POLYHEDRAL:
        return False
    if g.family in (Family.CYCLIC, Family.DIHEDRAL):
        return g.m % 4 != 0
    return True


@dataclass(frozen=True)
class GroupList:
    n: int
    groups: Tuple[GroupDescriptor, ...] = field(default_factory=tuple)

    @classmethod
    def from_groups(cls, n: int, groups: Iterable[GroupDescriptor]) -> "GroupList":
        unique = {canonicalize(g) for g in groups}
        return cls(n, tuple(sorted(unique, key=lambda g: g.sort_key)))

    def __iter__(self):
        return iter(self.groups)

    def __len__(self):
        return len(self.groups)

    def __contains__(self, g):
        try:
            return canonicalize(g) in self.groups
        except OutOfUniverseError:
            return False

    def of_family(self, *families: Family) -> Tuple[GroupDescriptor, ...]:
        return tuple(g for g in self.groups if g.family in families)

    def names(self):
        return [str(g) for g in self.groups]
