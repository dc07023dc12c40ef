import json

import pytest

from src.errors import DomainError
from src.visualization.tables import TableFormat, emit_table, group_columns

HEADER = "| Graph | Polyhedral Groups | Z_m and D_m | Z_r x Z_s and (Z_r x Z_s):Z2 | Z_r x D_s and D_r x D_s |"


def test_markdown_row():
    lines = emit_table(7, 7, TableFormat.MARKDOWN).split("\n")
    assert lines == [HEADER,
                     "|---|---|---|---|---|",
                     "| K_7 | None | Z2, Z3, Z5, Z7, D3, D5, D7 | None | None |"]


def test_markdown_small_rows_come_from_catalog():
    rows = emit_table(2, 3, "md").split("\n")[2:]
    assert rows == ["| K_2 | None | Z2 | None | None |",
                    "| K_3 | None | Z3, D3 | None | None |"]


def test_csv():
    lines = emit_table(9, 10, "csv").split("\n")
    assert lines[0] == "n,polyhedral,cyclic_dihedral,zxz_family,product_dihedral"
    assert lines[1] == "9,None,Z2;Z3;Z7;Z9;D2;D3;D7;D9,Z3xZ3;(Z3xZ3):Z2,None"
    assert lines[2].startswith("10,None,")
    assert len(lines) == 3


def test_json_lines():
    lines = emit_table(2, 3, "json").split("\n")
    assert lines[0] == '{"n":2,"groups":[{"name":"Z2","family":"cyclic","order":2,"clause":"Catalog"}]}'
    assert json.loads(lines[1])["groups"][1] == {"name": "D3", "family": "dihedral", "order": 6,
                                                 "clause": "Catalog"}


def test_pretty_names():
    row = emit_table(18, 18, "md", pretty=True).split("\n")[2]
    assert "(ℤ₃ × ℤ₃) ⋊ ℤ₂" in row
    assert row.endswith("| ℤ₃ × D₃, D₃ × D₃ |")


def test_include_trivial_goes_with_cyclic_groups():
    assert group_columns(7, include_trivial=True)["cyclic_dihedral"][0] == "Z1"


def test_k20_polyhedral_cell():
    assert group_columns(20)["polyhedral"] == ["A4", "S4", "A5"]


@pytest.mark.parametrize("a, b", [(1, 5), (8, 7)])
def test_invalid_range(a, b):
    with pytest.raises(DomainError):
        emit_table(a, b)


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_table(7, 7, "html")


def test_output_is_deterministic():
    assert emit_table(7, 40, "csv") == emit_table(7, 40, "csv")


def test_format_keyword():
    assert emit_table(7, 7, fmt="csv") == emit_table(7, 7, TableFormat.CSV)
    assert emit_table(7, 7, fmt=TableFormat.JSON).startswith('{"n":7,')
