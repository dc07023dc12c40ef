"""
Full lists of realizable groups for a given n, and the inverse question of
which complete graphs realize a given group.

For n > 6 the candidates come from divisors of n, n-1, n-2 and n-3: every
clause of the classification demands that some group parameter divides one
of these (or names a fixed small group), so nothing outside
:func:`candidate_groups` can pass :func:`check`. :func:`search_space` is the
exhaustive scan of every descriptor small enough to matter and is kept as the
oracle the divisor shortcut is tested against.
"""
from typing import Iterator, List, Optional, Set

from sympy import divisors

from src.classification.clauses import ClassificationResult
from src.classification.theorems import check
from src.data.catalog import known_groups
from src.data.constants import CATALOG_ONLY_MAX_N
from src.errors import DomainError
from src.groups.descriptors import (TRIVIAL, GroupDescriptor, GroupList,
                                    PolyhedralKind, canonicalize)
from src.utils import get_logger

logger = get_logger(__name__)


def _require_vertices(n: int) -> None:
    if n < 2:
        raise DomainError(f"n = {n}: complete graphs need at least 2 vertices")


def _odd_divisors(k: int) -> List[int]:
    return [d for d in divisors(k) if d % 2 == 1] if k > 0 else []


def _zxz_pairs(p: int) -> Iterator[tuple]:
    # canonical (r, s) with rs = p: r | s, r >= 3, i.e. r^2 | p
    for r in divisors(p):
        if r >= 3 and p % (r * r) == 0:
            yield r, p // r


def _odd_factor_pairs(p: int) -> Iterator[tuple]:
    for r in divisors(p):
        if r >= 3 and p // r >= 3:
            yield r, p // r


def candidate_groups(n: int) -> Set[GroupDescriptor]:
    """Every canonical non-trivial descriptor that could be realizable for K_n, n > 6."""
    if n <= CATALOG_ONLY_MAX_N:
        raise DomainError(f"n = {n}: candidates are only generated for n > {CATALOG_ONLY_MAX_N}")
    candidates = {GroupDescriptor.polyhedral(kind) for kind in PolyhedralKind}

    orders = {2}
    for k in (n, n - 1, n - 2, n - 3):
        orders.update(d for d in divisors(k) if d >= 2)
    for m in orders:
        candidates.add(GroupDescriptor.cyclic(m))
        candidates.add(GroupDescriptor.dihedral(m))

    abelian_orders = set(_odd_divisors(n)) | set(_odd_divisors(n - 3)) | {9}
    for p in abelian_orders:
        for r, s in _zxz_pairs(p):
            candidates.add(GroupDescriptor.zxz(r, s))
            candidates.add(GroupDescriptor.zxz_semi_z2(r, s))

    half = _odd_divisors(n // 2) if n % 2 == 0 else []
    for p in set(half) | {9}:
        for r, s in _odd_factor_pairs(p):
            candidates.add(GroupDescriptor.zxd(r, s))
            if r <= s:
                candidates.add(GroupDescriptor.dxd(r, s))
    return candidates


def search_space(n: int) -> Iterator[GroupDescriptor]:
    """Every canonical descriptor the classification could possibly accept for n > 6.

    Cyclic and dihedral orders stop at n because for m > n the residue of n
    is n itself, which is above 3. Product orders are bounded the same way by
    their divisibility clauses."""
    if n <= CATALOG_ONLY_MAX_N:
        raise DomainError(f"n = {n}: the search space is only defined for n > {CATALOG_ONLY_MAX_N}")
    for kind in PolyhedralKind:
        yield GroupDescriptor.polyhedral(kind)
    for m in range(2, n + 1):
        yield GroupDescriptor.cyclic(m)
        yield GroupDescriptor.dihedral(m)
    # s runs over odd multiples of r
    abelian = {(3, 3)} | {(r, s) for r in range(3, n + 1, 2) for s in range(r, n // r + 1, 2 * r)}
    for r, s in sorted(abelian):
        yield GroupDescriptor.zxz(r, s)
        yield GroupDescriptor.zxz_semi_z2(r, s)
    pairs = {(3, 3)} | {(r, s) for r in range(3, n + 1, 2) for s in range(3, n // (2 * r) + 1, 2)}
    for r, s in sorted(pairs):
        yield GroupDescriptor.zxd(r, s)
        if r <= s:
            yield GroupDescriptor.dxd(r, s)


def enumerate_groups(n: int, include_trivial: bool = False, catalog_path: Optional[str] = None) -> GroupList:
    """All canonical groups realizable as TSG+ of an embedding of K_n, sorted.

    For n <= 6 this is the catalog row verbatim. The trivial group is only
    added on request, and only for n > 6. `catalog_path` selects the catalog
    used for n <= 6."""
    _require_vertices(n)
    if n <= CATALOG_ONLY_MAX_N:
        return known_groups(n, catalog_path).groups

    realizable = [g for g in candidate_groups(n) if check(n, g, catalog_path).realizable]
    if include_trivial:
        realizable.append(TRIVIAL)
    groups = GroupList.from_groups(n, realizable)
    logger.info(f"K{n}: {len(groups)} realizable groups")
    return groups


def classify(n: int, include_trivial: bool = False,
             catalog_path: Optional[str] = None) -> List[ClassificationResult]:
    """Like :func:`enumerate_groups`, but keeps the deciding clause of each group."""
    return [check(n, g, catalog_path) for g in enumerate_groups(n, include_trivial, catalog_path)]


def realizing_vertex_counts(g: GroupDescriptor, n_from: int, n_to: int,
                            catalog_path: Optional[str] = None) -> List[int]:
    """Every n in [n_from, n_to] (n >= 2) for which K_n has an embedding with TSG+ = g."""
    if n_from > n_to:
        raise DomainError(f"empty range [{n_from}, {n_to}]")
    g = canonicalize(g)
    return [n for n in range(max(n_from, 2), n_to + 1) if check(n, g, catalog_path).realizable]
