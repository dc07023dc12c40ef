"""
=============================
Automorphism realizability
=============================

An automorphism of K_n is a permutation of its vertices, and up to
conjugacy it is described by its cycle type. This module decides which
cycle types of order m are induced by an order-m orientation preserving
homeomorphism of (S^3, Gamma) for some embedding Gamma of K_n, n > 6.

**Classes**
    :class CycleType:
    :class AutomorphismVerdict:

"""
__docformat__ = 'reStructuredText'

import re
from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from src.data.constants import CATALOG_ONLY_MAX_N
from src.errors import DomainError, InconsistentOrderError, PermutationError
from src.utils import get_logger

logger = get_logger(__name__)

_CYCLE_TYPE_TEXT = re.compile(r"^\[\s*(?P<cycles>\d+(?:\s*,\s*\d+)*)?\s*\]\s*\+\s*f(?P<fixed>\d+)$")

# Largest odd fixed-vertex count and largest count for involutions.
MAX_FIXED_ODD = 3
MAX_FIXED_INVOLUTION = 2


@dataclass(frozen=True)
class CycleType:
    n: int
    cycles: Tuple[int, ...] = ()
    fixed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(sorted((int(c) for c in self.cycles), reverse=True)))
        if any(c < 2 for c in self.cycles):
            raise PermutationError(f"cycle lengths must be at least 2, got {list(self.cycles)}")
        if self.fixed < 0:
            raise PermutationError(f"fixed-vertex count must be non-negative, got {self.fixed}")
        if sum(self.cycles) + self.fixed != self.n:
            raise PermutationError(f"cycles {list(self.cycles)} and {self.fixed} fixed vertices "
                                   f"do not add up to n = {self.n}")

    @property
    def order(self) -> int:
        return lcm(1, *self.cycles)

    @classmethod
    def from_text(cls, text: str, n: Optional[int] = None) -> "CycleType":
        """Parses "[9,3]+f0"; n defaults to the number of vertices the text describes."""
        match = _CYCLE_TYPE_TEXT.match(text.strip())
        if not match:
            raise PermutationError(f"Cannot parse cycle type {text!r}: expected e.g. '[9,3]+f0'")
        cycles = [int(c) for c in match.group("cycles").split(",")] if match.group("cycles") else []
        fixed = int(match.group("fixed"))
        return cls(sum(cycles) + fixed if n is None else n, tuple(cycles), fixed)

    def __str__(self):
        return f"[{','.join(map(str, self.cycles))}]+f{self.fixed}"


@dataclass(frozen=True)
class AutomorphismVerdict:
    cycle_type: CycleType
    m: int
    realizable: bool
    part: Optional[int] = None

    def summary(self) -> str:
        if not self.realizable:
            return "not realizable"
        if self.part is None:
            return "realizable (identity)"
        return f"realizable, part ({self.part})"

    def to_dict(self) -> dict:
        return {"n": self.cycle_type.n,
                "cycle_type": str(self.cycle_type),
                "m": self.m,
                "realizable": self.realizable,
                "part": self.part}


def _validate_images(perm: Sequence[int]) -> None:
    n = len(perm)
    if n == 0:
        raise PermutationError("a permutation needs at least one vertex")
    outside = [p for p in perm if not 0 <= p < n]
    if outside:
        raise PermutationError(f"images must lie in 0..{n - 1}, got {outside[0]}")
    duplicated = sorted(image for image, count in Counter(perm).items() if count > 1)
    if duplicated:
        raise PermutationError(f"not a bijection: image {duplicated[0]} appears more than once")


def cycle_type_of(perm: Sequence[int]) -> CycleType:
    """Cycle type of the permutation i -> perm[i] of {0, ..., n-1}."""
    perm = [int(p) for p in perm]
    _validate_images(perm)
    structure = Permutation(perm).cycle_structure
    cycles = [length for length, count in structure.items() if length > 1 for _ in range(count)]
    return CycleType(len(perm), tuple(cycles), structure.get(1, 0))


def is_realizable(ct: CycleType, m: int) -> AutomorphismVerdict:
    if ct.n <= CATALOG_ONLY_MAX_N:
        raise DomainError(f"n = {ct.n}: automorphism realizability is only decided for n > {CATALOG_ONLY_MAX_N}")
    if m < 1:
        raise DomainError(f"m = {m}: the order of an automorphism is at least 1")
    if m != ct.order:
        raise InconsistentOrderError(f"{ct} has order {ct.order}, not {m}")

    def verdict(part):
        logger.debug(f"{ct} of order {m}: {'part ' + str(part) if part else 'no part'} matches")
        return AutomorphismVerdict(ct, m, part is not None, part)

    if m == 1:
        return AutomorphismVerdict(ct, m, True)

    all_m = all(c == m for c in ct.cycles)
    if m % 2 == 0:
        if m > 2 and all_m and ct.fixed == 0:
            return verdict(1)
        if m == 2 and all_m and ct.fixed <= MAX_FIXED_INVOLUTION:
            return verdict(2)
        return verdict(None)

    if all_m and ct.fixed <= MAX_FIXED_ODD:
        return verdict(3)
    if m % 3 == 0 and m > 3 and ct.fixed == 0 and ct.cycles[-1] == 3 and all(c == m for c in ct.cycles[:-1]):
        return verdict(4)
    return verdict(None)


def realizable_cycle_types(n: int, m: int) -> List[CycleType]:
    """Every cycle type of order m on n vertices that an order-m homeomorphism can induce."""
    if n <= CATALOG_ONLY_MAX_N:
        raise DomainError(f"n = {n}: automorphism realizability is only decided for n > {CATALOG_ONLY_MAX_N}")
    if m < 2:
        raise DomainError(f"m = {m}: listing needs m >= 2")

    if m % 2 == 0:
        max_fixed = MAX_FIXED_INVOLUTION if m == 2 else 0
    else:
        max_fixed = MAX_FIXED_ODD
    found = []
    for fixed in range(max_fixed + 1):
        k, rest = divmod(n - fixed, m)
        if rest == 0 and k >= 1:
            found.append(CycleType(n, (m,) * k, fixed))

    if m % 2 == 1 and m % 3 == 0 and m > 3:
        k, rest = divmod(n - 3, m)
        if rest == 0 and k >= 1:
            found.append(CycleType(n, (m,) * k + (3,), 0))
    return sorted(found, key=lambda ct: (ct.fixed, ct.cycles))
