"""
===================
Published catalog
===================

Loads the checked-in list of topological symmetry groups for K_2 ... K_20 and
K_140. Rows n <= 6 are what the classifier answers from; the other rows are
regression ground truth for the theorem-based enumeration.

**Classes**
    :class CatalogSource:
    :class CatalogEntry:

"""
__docformat__ = 'reStructuredText'

import os
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Tuple

from src.errors import CatalogFormatError, CatalogNotFoundError, TSGError
from src.groups.descriptors import GroupList
from src.groups.naming import parse_group
from src.utils import get_env, get_logger

logger = get_logger(__name__)

CATALOG_PATH = os.path.join(os.path.dirname(__file__), "catalog.txt")

_ROW = re.compile(r"^K(?P<n>\d+)\s*:\s*(?P<names>.*)$")
_SOURCE = re.compile(r"^#\s*source:\s*(?P<tag>\S+)\s*$")


class CatalogSource(Enum):
    SMALL_GRAPHS_TABLE = "Table1"
    K140_LIST = "Sec2_K140"


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    groups: GroupList
    source: CatalogSource


def get_catalog_path(path: Optional[str] = None) -> str:
    return path or get_env("TSG_CATALOG_PATH") or CATALOG_PATH


def _parse_names(names: str, path: str, line_number: int):
    if names.strip().lower() == "none":
        return []
    groups = []
    for name in names.split(","):
        try:
            groups.append(parse_group(name))
        except TSGError as e:
            raise CatalogFormatError(path, line_number, str(e))
    return groups


@lru_cache(maxsize=None)
def _load_catalog(path: str) -> Dict[int, CatalogEntry]:
    logger.info(f"Reading catalog from {path}...")
    entries = {}
    source = None
    with open(path, "r", encoding="utf-8") as infile:
        for line_number, raw in enumerate(infile, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                directive = _SOURCE.match(line)
                if directive:
                    try:
                        source = CatalogSource(directive.group("tag"))
                    except ValueError:
                        raise CatalogFormatError(path, line_number,
                                                 f"unknown source {directive.group('tag')!r}")
                continue

            row = _ROW.match(line)
            if not row:
                raise CatalogFormatError(path, line_number, f"expected 'K<n>: <groups>', got {line!r}")
            if source is None:
                raise CatalogFormatError(path, line_number, "row appears before any '# source:' line")
            n = int(row.group("n"))
            if n in entries:
                raise CatalogFormatError(path, line_number, f"K{n} is listed twice")
            groups = _parse_names(row.group("names"), path, line_number)
            listed = GroupList.from_groups(n, groups)
            if len(listed) != len(groups):
                raise CatalogFormatError(path, line_number, f"K{n} lists a group twice")
            entries[n] = CatalogEntry(n, listed, source)
    return entries


def load_catalog(path: Optional[str] = None) -> Dict[int, CatalogEntry]:
    return dict(_load_catalog(get_catalog_path(path)))


def catalog_sizes(path: Optional[str] = None) -> Tuple[int, ...]:
    return tuple(sorted(load_catalog(path)))


def known_groups(n: int, path: Optional[str] = None) -> CatalogEntry:
    catalog = _load_catalog(get_catalog_path(path))
    if n not in catalog:
        raise CatalogNotFoundError(f"K{n} is not in the catalog (known: {', '.join(map(str, sorted(catalog)))})")
    return catalog[n]
