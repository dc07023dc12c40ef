import pytest

from src.classification.enumeration import (candidate_groups, classify,
                                            enumerate_groups,
                                            realizing_vertex_counts,
                                            search_space)
from src.classification.theorems import check
from src.errors import DomainError
from src.groups.descriptors import TRIVIAL, Family, GroupDescriptor
from src.groups.naming import parse_group

K140 = ("A4, S4, A5, Z2, Z3, Z4, Z5, Z7, Z10, Z14, Z20, Z23, Z28, Z35, Z69, Z70, Z137, Z139, Z140, "
        "D2, D3, D4, D5, D7, D10, D14, D20, D23, D28, D35, D69, D70, D137, D139, D140, "
        "Z5xD7, Z7xD5, D5xD7").split(", ")


def test_enumerate_k7():
    assert enumerate_groups(7).names() == ["Z2", "Z3", "Z5", "Z7", "D3", "D5", "D7"]


def test_enumerate_k19():
    assert enumerate_groups(19).names() == ["Z2", "Z3", "Z9", "Z17", "Z19", "D3", "D9", "D17", "D19"]


def test_enumerate_k140():
    groups = enumerate_groups(140)
    assert groups.names() == K140
    assert len(groups.of_family(Family.POLYHEDRAL)) == 3
    assert len(groups.of_family(Family.CYCLIC)) == 16
    assert len(groups.of_family(Family.DIHEDRAL)) == 16
    assert len(groups.of_family(Family.ZXD, Family.DXD)) == 3


def test_small_n_is_the_catalog_row():
    assert enumerate_groups(2).names() == ["Z2"]
    assert enumerate_groups(3).names() == ["Z3", "D3"]
    assert enumerate_groups(3, include_trivial=True).names() == ["Z3", "D3"]


def test_include_trivial():
    groups = enumerate_groups(7, include_trivial=True)
    assert groups.groups[0] == TRIVIAL
    assert len(groups) == len(enumerate_groups(7)) + 1


def test_enumerate_domain():
    with pytest.raises(DomainError):
        enumerate_groups(1)


@pytest.mark.parametrize("n, present, absent", [
    (15, "Z3xZ3", "(Z3xZ3):Z2"),
    (33, "Z3xZ3", "(Z3xZ3):Z2"),
    (51, "Z3xZ3", "(Z3xZ3):Z2"),
    (24, "Z3xD3", "D3xD3"),
    (60, "Z3xD3", "D3xD3"),
    (96, "Z3xD3", "D3xD3"),
])
def test_parity_lemmas(n, present, absent):
    groups = enumerate_groups(n)
    assert parse_group(present) in groups
    assert parse_group(absent) not in groups


@pytest.mark.parametrize("n", range(7, 200, 4))
def test_no_d2_when_n_is_3_mod_4(n):
    assert GroupDescriptor.dihedral(2) not in enumerate_groups(n)


@pytest.mark.parametrize("n", range(7, 61))
def test_divisor_candidates_cover_the_search_space(n):
    exhaustive = {g for g in search_space(n) if check(n, g).realizable}
    assert exhaustive <= candidate_groups(n)
    assert set(enumerate_groups(n)) == exhaustive


def test_classify_keeps_clauses():
    results = classify(18)
    clauses = {str(r.group): str(r.clause) for r in results}
    assert clauses["Z3xD3"] == "Thm3(1)"
    assert clauses["(Z3xZ3):Z2"] == "Thm2(1)"
    assert clauses["D2"] == "Thm1(3)"
    assert all(r.realizable for r in results)


def test_enumerate_is_deterministic():
    assert enumerate_groups(360) == enumerate_groups(360)


@pytest.mark.parametrize("group, n_from, n_to, expected", [
    ("Z3xZ3", 7, 30, [9, 12, 15, 18, 21, 24, 27, 30]),
    ("(Z3xZ3):Z2", 7, 30, [9, 12, 18, 21, 24, 27, 30]),
    ("D3xD3", 7, 50, [18, 36, 42]),
    ("Z3xD3", 7, 50, [18, 24, 36, 42]),
    ("Z3xZ3", 2, 10, [6, 9]),
    ("A5", 2, 70, [5, 20, 60, 61, 65]),
])
def test_realizing_vertex_counts(group, n_from, n_to, expected):
    assert realizing_vertex_counts(parse_group(group), n_from, n_to) == expected


def test_realizing_vertex_counts_range():
    with pytest.raises(DomainError):
        realizing_vertex_counts(GroupDescriptor.cyclic(2), 10, 9)
