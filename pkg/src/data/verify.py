from dataclasses import dataclass
from typing import Optional, Tuple

from src.classification.enumeration import enumerate_groups
from src.data.catalog import known_groups
from src.data.constants import CATALOG_ONLY_MAX_N
from src.errors import DomainError
from src.groups.descriptors import GroupDescriptor
from src.groups.naming import display_name
from src.utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class DiffReport:
    n: int
    missing: Tuple[GroupDescriptor, ...] = ()
    extra: Tuple[GroupDescriptor, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.missing and not self.extra

    def __str__(self):
        if self.is_empty:
            return f"K{self.n}: matches the catalog"
        parts = []
        if self.missing:
            parts.append("missing " + ", ".join(map(display_name, self.missing)))
        if self.extra:
            parts.append("extra " + ", ".join(map(display_name, self.extra)))
        return f"K{self.n}: " + "; ".join(parts)


def verify_against_catalog(n: int, path: Optional[str] = None) -> DiffReport:
    """Compares the theorem-based enumeration for K_n with the published row."""
    if n <= CATALOG_ONLY_MAX_N:
        raise DomainError(f"n = {n}: rows up to K{CATALOG_ONLY_MAX_N} are the classifier's own source")
    expected = known_groups(n, path).groups
    produced = enumerate_groups(n, catalog_path=path)
    report = DiffReport(n,
                        tuple(g for g in expected if g not in produced.groups),
                        tuple(g for g in produced if g not in expected.groups))
    if not report.is_empty:
        logger.warning(str(report))
    return report
