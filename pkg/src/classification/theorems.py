"""
==========================
Realizability predicates
==========================

Decides whether a canonical group descriptor is TSG+ of some embedding of
K_n. For n > 6 every family has a closed-form residue or divisibility
condition; n <= 6 is answered from the published catalog.

Each checker returns a :class:`ClassificationResult` naming the clause that
decided it. When several clauses hold, the lowest-numbered one is reported.

"""
__docformat__ = 'reStructuredText'

from dataclasses import replace
from typing import Optional

from src.classification.clauses import ClassificationResult, ClauseRef, Theorem
from src.data.catalog import known_groups
from src.data.constants import (CATALOG_ONLY_MAX_N, KLEIN_RESIDUES,
                                ODD_CYCLIC_RESIDUES, POLYHEDRAL_MIN_N,
                                POLYHEDRAL_RESIDUES)
from src.errors import ContractViolation, DomainError
from src.groups.descriptors import (PRODUCT_FAMILIES, Family, GroupDescriptor,
                                    PolyhedralKind, canonicalize, is_canonical)
from src.groups.naming import display_name
from src.utils import get_logger

logger = get_logger(__name__)

_POLYHEDRAL_THEOREMS = {
    PolyhedralKind.A4: Theorem.A4,
    PolyhedralKind.S4: Theorem.S4,
    PolyhedralKind.A5: Theorem.A5,
}


def _require_theorem_range(n: int) -> None:
    if n <= CATALOG_ONLY_MAX_N:
        raise DomainError(f"n = {n}: the realizability theorems need n > {CATALOG_ONLY_MAX_N}; "
                          f"use the catalog (known_groups) for small complete graphs")


def _result(n, g, clause, note, realizable=True):
    logger.debug(f"K{n}, {display_name(g)}: {'yes' if realizable else 'no'} by {clause}")
    return ClassificationResult(n, g, realizable, clause, note)


def check_polyhedral(n: int, kind: PolyhedralKind) -> ClassificationResult:
    if n < POLYHEDRAL_MIN_N:
        raise DomainError(f"n = {n}: the polyhedral theorems are stated for n >= {POLYHEDRAL_MIN_N}")
    kind = PolyhedralKind(kind)
    modulus, residues = POLYHEDRAL_RESIDUES[kind]
    clause = ClauseRef(_POLYHEDRAL_THEOREMS[kind])
    residue = n % modulus
    allowed = ", ".join(map(str, residues))
    if residue in residues:
        note = f"{clause}: {n} ≡ {residue} (mod {modulus})"
    else:
        note = f"{clause}: {n} ≡ {residue} (mod {modulus}), not one of {allowed}"
    return _result(n, GroupDescriptor.polyhedral(kind), clause, note, residue in residues)


def check_cyclic_dihedral(n: int, m: int, kind: Family) -> ClassificationResult:
    """Cyclic and dihedral groups share one predicate; only m = 2 tells them apart."""
    _require_theorem_range(n)
    if m < 2:
        raise DomainError(f"m = {m}: cyclic and dihedral checks need m >= 2")
    if kind == Family.CYCLIC:
        g = GroupDescriptor.cyclic(m)
    elif kind == Family.DIHEDRAL:
        g = GroupDescriptor.dihedral(m)
    else:
        raise ContractViolation(f"kind must be CYCLIC or DIHEDRAL, got {kind!r}")

    if m == 2:
        if kind == Family.CYCLIC:
            return _result(n, g, ClauseRef(Theorem.CYCLIC_DIHEDRAL, 4), "Thm1(4): Z2 occurs for every n > 6")
        residue = n % 4
        if residue in KLEIN_RESIDUES:
            return _result(n, g, ClauseRef(Theorem.CYCLIC_DIHEDRAL, 3), f"Thm1(3): {n} ≡ {residue} (mod 4)")
        return _result(n, g, ClauseRef(Theorem.NO_D2), f"NoD2: {n} ≡ 3 (mod 4)", False)

    residue = n % m
    if m % 2 == 0:
        if residue == 0:
            return _result(n, g, ClauseRef(Theorem.CYCLIC_DIHEDRAL, 1), f"Thm1(1): {m} | {n}")
        return _result(n, g, ClauseRef(Theorem.CYCLIC_DIHEDRAL), f"Thm1: {m} is even and {m} ∤ {n}", False)

    if residue in ODD_CYCLIC_RESIDUES:
        return _result(n, g, ClauseRef(Theorem.CYCLIC_DIHEDRAL, 2), f"Thm1(2): {n} ≡ {residue} (mod {m})")
    return _result(n, g, ClauseRef(Theorem.CYCLIC_DIHEDRAL),
                   f"Thm1: {n} ≡ {residue} (mod {m}), not one of 0, 1, 2, 3", False)


def _require_canonical(g: GroupDescriptor, families) -> None:
    if g.family not in families:
        raise ContractViolation(f"{display_name(g)} is a {g.family.label} group, "
                                f"expected one of {', '.join(f.label for f in families)}")
    if not is_canonical(g):
        raise ContractViolation(f"{g.family.name}{g.params} is not canonical; canonicalize it first")


def check_zxz(n: int, g: GroupDescriptor) -> ClassificationResult:
    """Z_r x Z_s and (Z_r x Z_s):Z2 with r | s and gcd(r, s) = r > 1."""
    _require_theorem_range(n)
    _require_canonical(g, (Family.ZXZ, Family.ZXZ_SEMI_Z2))
    r, s = g.params
    rs = r * s
    semi = g.family == Family.ZXZ_SEMI_Z2
    three_three = (r, s) == (3, 3)

    if n % rs == 0:
        return _result(n, g, ClauseRef(Theorem.ZXZ, 1), f"Thm2(1): {rs} | {n}")
    if r == 3 and (n - 3) % rs == 0:
        return _result(n, g, ClauseRef(Theorem.ZXZ, 2), f"Thm2(2): gcd = 3 and {rs} | {n - 3}")
    if three_three and not semi and (n - 6) % 9 == 0:
        return _result(n, g, ClauseRef(Theorem.ZXZ, 3), f"Thm2(3): 9 | {n - 6}")
    if three_three and semi and (n - 6) % 18 == 0:
        return _result(n, g, ClauseRef(Theorem.ZXZ, 4), f"Thm2(4): 18 | {n - 6}")

    if three_three and semi and (n - 6) % 9 == 0:
        return _result(n, g, ClauseRef(Theorem.ZXZ_SEMI_PARITY),
                       f"Lemma 4.1: 9 | {n - 6} but 18 ∤ {n - 6}", False)
    failed = [f"{rs} ∤ {n}"]
    if r == 3:
        failed.append(f"{rs} ∤ {n - 3}")
    if three_three:
        failed.append(f"{18 if semi else 9} ∤ {n - 6}")
    return _result(n, g, ClauseRef(Theorem.ZXZ), f"Thm2: {', '.join(failed)}", False)


def check_product_dihedral(n: int, g: GroupDescriptor) -> ClassificationResult:
    """Z_r x D_s and D_r x D_s with r, s odd and at least 3."""
    _require_theorem_range(n)
    _require_canonical(g, (Family.ZXD, Family.DXD))
    r, s = g.params
    two_rs = 2 * r * s
    dxd = g.family == Family.DXD
    three_three = (r, s) == (3, 3)

    if n % two_rs == 0:
        return _result(n, g, ClauseRef(Theorem.PRODUCT_DIHEDRAL, 1), f"Thm3(1): {two_rs} | {n}")
    if three_three and not dxd and (n - 6) % 18 == 0:
        return _result(n, g, ClauseRef(Theorem.PRODUCT_DIHEDRAL, 2), f"Thm3(2): 18 | {n - 6}")
    if three_three and dxd and (n - 6) % 36 == 0:
        return _result(n, g, ClauseRef(Theorem.PRODUCT_DIHEDRAL, 3), f"Thm3(3): 36 | {n - 6}")

    if three_three and dxd and (n - 6) % 18 == 0:
        return _result(n, g, ClauseRef(Theorem.PRODUCT_DIHEDRAL_PARITY),
                       f"Lemma 5.5: 18 | {n - 6} but 36 ∤ {n - 6}", False)
    failed = [f"{two_rs} ∤ {n}"]
    if three_three:
        failed.append(f"{36 if dxd else 18} ∤ {n - 6}")
    return _result(n, g, ClauseRef(Theorem.PRODUCT_DIHEDRAL), f"Thm3: {', '.join(failed)}", False)


def _check_catalog(n: int, g: GroupDescriptor, catalog_path: Optional[str] = None) -> ClassificationResult:
    entry = known_groups(n, catalog_path)
    listed = g in entry.groups
    verb = "lists" if listed else "does not list"
    return _result(n, g, ClauseRef(Theorem.CATALOG), f"Catalog: K{n} row {verb} {display_name(g)}", listed)


def _check_canonical(n: int, g: GroupDescriptor, catalog_path: Optional[str] = None) -> ClassificationResult:
    if n <= CATALOG_ONLY_MAX_N:
        return _check_catalog(n, g, catalog_path)

    family = g.family
    if family == Family.TRIVIAL:
        return _result(n, g, ClauseRef(Theorem.SUBGROUP),
                       "SubgroupLemma: the trivial subgroup of any realizable group is realizable")
    if family == Family.POLYHEDRAL:
        return check_polyhedral(n, g.kind)
    if family in (Family.CYCLIC, Family.DIHEDRAL):
        return check_cyclic_dihedral(n, g.m, family)
    if family in (Family.ZXZ, Family.ZXZ_SEMI_Z2):
        return check_zxz(n, g)
    return check_product_dihedral(n, g)


def check(n: int, g: GroupDescriptor, catalog_path: Optional[str] = None) -> ClassificationResult:
    """Canonicalizes `g` and decides whether it is TSG+ of an embedding of K_n.

    A product whose factors are coprime collapses to a cyclic or dihedral
    group; the result is then reported for the collapsed group and the note
    records the rewrite. `catalog_path` selects the catalog that answers n <= 6."""
    if n < 2:
        raise DomainError(f"n = {n}: complete graphs need at least 2 vertices")
    canonical = canonicalize(g)
    result = _check_canonical(n, canonical, catalog_path)
    if canonical == g:
        return result

    original = display_name(g)
    if g.family in PRODUCT_FAMILIES:
        logger.warning(f"{original} collapses to {display_name(canonical)}; reporting K{n} for the latter")
    return replace(result, note=f"{original} ≅ {display_name(canonical)}; {result.note}")
