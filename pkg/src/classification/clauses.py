from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.groups.descriptors import GroupDescriptor, group_order
from src.groups.naming import display_name


class Theorem(Enum):
    CYCLIC_DIHEDRAL = "Thm1"
    ZXZ = "Thm2"
    PRODUCT_DIHEDRAL = "Thm3"
    A4 = "A4Thm"
    S4 = "S4Thm"
    A5 = "A5Thm"
    NO_D2 = "NoD2"
    ZXZ_SEMI_PARITY = "Lemma4.1"
    PRODUCT_DIHEDRAL_PARITY = "Lemma5.5"
    SUBGROUP = "SubgroupLemma"
    CATALOG = "Catalog"


PART_RANGES = {
    Theorem.CYCLIC_DIHEDRAL: range(1, 5),
    Theorem.ZXZ: range(1, 5),
    Theorem.PRODUCT_DIHEDRAL: range(1, 4),
}


@dataclass(frozen=True)
class ClauseRef:
    theorem: Theorem
    part: Optional[int] = None

    def __post_init__(self):
        if self.part is None:
            return
        allowed = PART_RANGES.get(self.theorem)
        if allowed is None or self.part not in allowed:
            raise ValueError(f"{self.theorem.value} has no part {self.part}")

    def __str__(self):
        if self.part is None:
            return self.theorem.value
        return f"{self.theorem.value}({self.part})"


@dataclass(frozen=True)
class ClassificationResult:
    """Whether `group` is TSG+ of some embedding of K_n, and which clause decided it.

    When realizable, `clause` is the lowest-numbered satisfied condition;
    otherwise it names the theorem whose conditions all failed or the
    lemma that excludes the group."""
    n: int
    group: GroupDescriptor
    realizable: bool
    clause: ClauseRef
    note: str = ""

    def summary(self) -> str:
        verdict = "realizable" if self.realizable else "not realizable"
        return f"{verdict} ({self.note})" if self.note else verdict

    def to_dict(self) -> dict:
        return {"n": self.n,
                "group": display_name(self.group),
                "family": self.group.family.label,
                "order": group_order(self.group),
                "realizable": self.realizable,
                "clause": str(self.clause),
                "note": self.note}
