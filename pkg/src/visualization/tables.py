"""
Renders enumeration results in the four-column layout of the published
table of small complete graphs: polyhedral groups, cyclic and dihedral
groups, the Z_r x Z_s family, and the product-dihedral family.
"""
from enum import Enum
from typing import Callable, Dict, List, Optional

import pandas as pd

from src.classification.enumeration import classify, enumerate_groups
from src.data.constants import EMPTY_CELL, MARKDOWN_HEADERS, TABLE_COLUMNS
from src.errors import DomainError
from src.groups.descriptors import Family, GroupDescriptor, group_order
from src.groups.naming import display_name, pretty_name
from src.utils import get_logger, to_json, to_jsonl

logger = get_logger(__name__)

COLUMN_FAMILIES = {
    "polyhedral": (Family.POLYHEDRAL,),
    "cyclic_dihedral": (Family.TRIVIAL, Family.CYCLIC, Family.DIHEDRAL),
    "zxz_family": (Family.ZXZ, Family.ZXZ_SEMI_Z2),
    "product_dihedral": (Family.ZXD, Family.DXD),
}


class TableFormat(str, Enum):
    MARKDOWN = "md"
    CSV = "csv"
    JSON = "json"


def _namer(pretty: bool) -> Callable[[GroupDescriptor], str]:
    return pretty_name if pretty else display_name


def group_columns(n: int, include_trivial: bool = False, pretty: bool = False,
                  catalog_path: Optional[str] = None) -> Dict[str, List[str]]:
    name = _namer(pretty)
    groups = enumerate_groups(n, include_trivial, catalog_path)
    return {column: [name(g) for g in groups.of_family(*families)]
            for column, families in COLUMN_FAMILIES.items()}


def row_json(n: int, include_trivial: bool = False, pretty: bool = False,
             catalog_path: Optional[str] = None) -> dict:
    name = _namer(pretty)
    return {"n": n,
            "groups": [{"name": name(result.group),
                        "family": result.group.family.label,
                        "order": group_order(result.group),
                        "clause": str(result.clause)}
                       for result in classify(n, include_trivial, catalog_path)]}


def _frame(n_from, n_to, include_trivial, pretty, separator, catalog_path) -> pd.DataFrame:
    rows = []
    for n in range(n_from, n_to + 1):
        columns = group_columns(n, include_trivial, pretty, catalog_path)
        rows.append([n] + [separator.join(cells) or EMPTY_CELL for cells in columns.values()])
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def _markdown(df: pd.DataFrame) -> str:
    lines = ["| " + " | ".join(MARKDOWN_HEADERS) + " |",
             "|" + "---|" * len(MARKDOWN_HEADERS)]
    for row in df.itertuples(index=False):
        cells = [f"K_{row.n}"] + [getattr(row, column) for column in TABLE_COLUMNS[1:]]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def emit_table(n_from: int, n_to: int, fmt: str = TableFormat.MARKDOWN,
               include_trivial: bool = False, pretty: bool = False,
               catalog_path: Optional[str] = None) -> str:
    """One row per n in [n_from, n_to]; the text has no trailing newline."""
    if not 2 <= n_from <= n_to:
        raise DomainError(f"invalid range [{n_from}, {n_to}]: need 2 <= a <= b")
    fmt = TableFormat(fmt)
    logger.info(f"Emitting {fmt.value} table for K{n_from}..K{n_to}")

    if fmt == TableFormat.JSON:
        return to_jsonl(row_json(n, include_trivial, pretty, catalog_path) for n in range(n_from, n_to + 1))
    if fmt == TableFormat.CSV:
        df = _frame(n_from, n_to, include_trivial, pretty, ";", catalog_path)
        return df.to_csv(index=False, lineterminator="\n").rstrip("\n")
    return _markdown(_frame(n_from, n_to, include_trivial, pretty, ", ", catalog_path))


def emit_row_json(n: int, include_trivial: bool = False, pretty: bool = False,
                  catalog_path: Optional[str] = None) -> str:
    return to_json(row_json(n, include_trivial, pretty, catalog_path))
