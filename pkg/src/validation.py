"""
=================
Property suites
=================

Consequence checks of the classification that can be run without a test
runner (``python -m src selftest``). Each suite returns a :class:`SuiteResult`;
the ``tests/`` package runs the same functions under pytest.

**Classes**
    :class SuiteResult:

"""
__docformat__ = 'reStructuredText'

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, List, Optional, Set

from sympy import divisors
from sympy.utilities.iterables import partitions

from src.automorphisms.cycle_types import (CycleType, is_realizable,
                                           realizable_cycle_types)
from src.classification.enumeration import (candidate_groups,
                                            enumerate_groups, search_space)
from src.classification.theorems import check
from src.data.catalog import catalog_sizes, known_groups
from src.data.constants import CATALOG_ONLY_MAX_N
from src.data.verify import verify_against_catalog
from src.groups.cayley import is_dihedral_table, multiplication_table
from src.groups.descriptors import (PRODUCT_FAMILIES, Family, GroupDescriptor,
                                    PolyhedralKind, canonicalize,
                                    group_order, in_dmdm_universe)
from src.groups.naming import display_name, parse_group
from src.utils import get_logger, load_config
from src.visualization.tables import emit_row_json

logger = get_logger(__name__)

# Published count for the K_140 list.
K140_GROUP_COUNT = 38


@dataclass
class SuiteResult:
    name: str
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.passed:
            return f"PASS {self.name}"
        shown = "; ".join(self.failures[:5])
        more = f" (+{len(self.failures) - 5} more)" if len(self.failures) > 5 else ""
        return f"FAIL {self.name}: {shown}{more}"


def _catalog_path(config):
    return config.get("catalog_path")


def _property_range(config):
    return range(CATALOG_ONLY_MAX_N + 1, config["selftest"]["property_n_max"] + 1)


def catalog_regression(config) -> SuiteResult:
    result = SuiteResult("catalog regression")
    for n in catalog_sizes(_catalog_path(config)):
        if n <= CATALOG_ONLY_MAX_N:
            continue
        report = verify_against_catalog(n, _catalog_path(config))
        if not report.is_empty:
            result.failures.append(str(report))
    groups = known_groups(140, _catalog_path(config)).groups
    if len(groups) != K140_GROUP_COUNT:
        result.failures.append(f"K140 row has {len(groups)} groups, expected {K140_GROUP_COUNT}")
    return result


def catalog_integrity(config) -> SuiteResult:
    result = SuiteResult("catalog integrity")
    for n in catalog_sizes(_catalog_path(config)):
        for g in known_groups(n, _catalog_path(config)).groups:
            if canonicalize(g) != g or parse_group(display_name(g)) != g:
                result.failures.append(f"K{n}: {display_name(g)} is not canonical or does not round-trip")
    return result


def universe_membership(config) -> SuiteResult:
    result = SuiteResult("universe membership")
    for n in _property_range(config):
        for g in enumerate_groups(n, catalog_path=_catalog_path(config)):
            if g.family == Family.POLYHEDRAL or in_dmdm_universe(g):
                continue
            if g.family in (Family.CYCLIC, Family.DIHEDRAL) and g.m % 4 == 0:
                continue
            result.failures.append(f"K{n}: {display_name(g)}")
    return result


def no_d2(config) -> SuiteResult:
    result = SuiteResult("no D2 for n = 3 mod 4")
    d2 = GroupDescriptor.dihedral(2)
    for n in range(7, config["selftest"]["no_d2_n_max"] + 1, 4):
        if d2 in enumerate_groups(n, catalog_path=_catalog_path(config)):
            result.failures.append(f"K{n}")
    return result


def ubiquity(config) -> SuiteResult:
    result = SuiteResult("Z2, Z3 and D3 ubiquity")
    always = [GroupDescriptor.cyclic(2), GroupDescriptor.cyclic(3), GroupDescriptor.dihedral(3)]
    for n in _property_range(config):
        groups = enumerate_groups(n, catalog_path=_catalog_path(config))
        result.failures.extend(f"K{n}: {display_name(g)}" for g in always if g not in groups)
    return result


def divisor_closure(config) -> SuiteResult:
    result = SuiteResult("divisor closure")
    for n in _property_range(config):
        groups = enumerate_groups(n, catalog_path=_catalog_path(config))
        for g in groups.of_family(Family.DIHEDRAL):
            expected = [GroupDescriptor.cyclic(g.m)]
            expected += [GroupDescriptor.dihedral(d) for d in divisors(g.m) if d >= 3]
            result.failures.extend(f"K{n}: {display_name(g)} without {display_name(e)}"
                                   for e in expected if e not in groups)
    return result


def product_closure(config) -> SuiteResult:
    result = SuiteResult("product closure")
    for n in _property_range(config):
        groups = enumerate_groups(n, catalog_path=_catalog_path(config))
        for g in groups.of_family(*PRODUCT_FAMILIES):
            r, s = g.params
            if g.family == Family.DXD:
                implied = GroupDescriptor.zxd(r, s)
            elif g.family == Family.ZXZ_SEMI_Z2:
                implied = GroupDescriptor.zxz(r, s)
            elif g.family == Family.ZXD:
                implied = canonicalize(GroupDescriptor.zxz(gcd(r, s), r * s // gcd(r, s)))
            else:
                continue
            if implied not in groups:
                result.failures.append(f"K{n}: {display_name(g)} without {display_name(implied)}")
    return result


def parity_lemmas(config) -> SuiteResult:
    result = SuiteResult("parity lemmas")
    parity = config["selftest"]["parity_n"]
    pairs = [(parity["zxz_semi"], GroupDescriptor.zxz(3, 3), GroupDescriptor.zxz_semi_z2(3, 3)),
             (parity["product_dihedral"], GroupDescriptor.zxd(3, 3), GroupDescriptor.dxd(3, 3))]
    for ns, present, absent in pairs:
        for n in ns:
            groups = enumerate_groups(n, catalog_path=_catalog_path(config))
            if present not in groups:
                result.failures.append(f"K{n}: {display_name(present)} missing")
            if absent in groups:
                result.failures.append(f"K{n}: {display_name(absent)} present")
    return result


def determinism(config) -> SuiteResult:
    result = SuiteResult("determinism")
    for n in _property_range(config):
        first = emit_row_json(n, catalog_path=_catalog_path(config))
        if first != emit_row_json(n, catalog_path=_catalog_path(config)):
            result.failures.append(f"K{n}")
    return result


def search_space_agreement(config) -> SuiteResult:
    result = SuiteResult("divisor candidates cover the search space")
    for n in range(CATALOG_ONLY_MAX_N + 1, config["selftest"]["search_space_n_max"] + 1):
        exhaustive = {g for g in search_space(n) if check(n, g, _catalog_path(config)).realizable}
        if not exhaustive <= candidate_groups(n):
            missing = sorted(exhaustive - candidate_groups(n), key=lambda g: g.sort_key)
            result.failures.append(f"K{n}: " + ", ".join(map(display_name, missing)))
    return result


def random_descriptor(rng: random.Random, max_parameter: int = 99) -> GroupDescriptor:
    family = rng.choice(list(Family))
    if family == Family.TRIVIAL:
        return GroupDescriptor.trivial()
    if family == Family.POLYHEDRAL:
        return GroupDescriptor.polyhedral(rng.choice(list(PolyhedralKind)))
    if family in (Family.CYCLIC, Family.DIHEDRAL):
        return GroupDescriptor(family, (rng.randint(1, max_parameter),))
    odd = range(1, max_parameter + 1, 2)
    return GroupDescriptor(family, (rng.choice(odd), rng.choice(odd)))


def round_trip(config, samples: int = 1000, seed: int = 0) -> SuiteResult:
    result = SuiteResult("canonical form round trip")
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_descriptor(rng)
        canonical = canonicalize(g)
        if canonicalize(canonical) != canonical:
            result.failures.append(f"{g}: canonicalize is not idempotent")
        if group_order(canonical) != group_order(g):
            result.failures.append(f"{g}: order changes under canonicalize")
        if parse_group(display_name(canonical)) != canonical:
            result.failures.append(f"{g}: {display_name(canonical)} does not parse back")
    return result


def all_cycle_types(n: int) -> List[CycleType]:
    cycle_types = []
    # partitions() reuses one dict, so read it before advancing
    for partition in partitions(n):
        cycles = tuple(length for length, count in partition.items() if length > 1 for _ in range(count))
        cycle_types.append(CycleType(n, cycles, partition.get(1, 0)))
    return cycle_types


def brute_force_cycle_types(n: int) -> Dict[int, Set[CycleType]]:
    """Realizable cycle types on n vertices keyed by order, for every order that occurs in S_n."""
    found = {}
    for ct in all_cycle_types(n):
        if ct.order == 1:
            continue
        found.setdefault(ct.order, set())
        if is_realizable(ct, ct.order).realizable:
            found[ct.order].add(ct)
    return found


def automorphism_oracle(config) -> SuiteResult:
    result = SuiteResult("automorphism oracle")
    low, high = config["selftest"]["automorphism_n_range"]
    for n in range(low, high + 1):
        for m, expected in sorted(brute_force_cycle_types(n).items()):
            if set(realizable_cycle_types(n, m)) != expected:
                result.failures.append(f"K{n}, m = {m}")
    return result


def cayley_oracle(config) -> SuiteResult:
    result = SuiteResult("semidirect products against dihedral tables")
    bound = config["selftest"]["cayley_max_parameter"]
    odd = range(1, bound + 1, 2)
    for r in odd:
        for s in odd:
            table = multiplication_table(GroupDescriptor.zxz_semi_z2(r, s))
            canonical = canonicalize(GroupDescriptor.zxz_semi_z2(r, s))
            dihedral = is_dihedral_table(table, r * s)
            if dihedral != (gcd(r, s) == 1) or dihedral != (canonical.family != Family.ZXZ_SEMI_Z2):
                result.failures.append(f"(Z{r}xZ{s}):Z2")
    return result


SUITES: List[Callable] = [catalog_regression,
                          catalog_integrity,
                          universe_membership,
                          no_d2,
                          ubiquity,
                          divisor_closure,
                          product_closure,
                          parity_lemmas,
                          determinism,
                          search_space_agreement,
                          round_trip,
                          automorphism_oracle,
                          cayley_oracle]


def run_selftest(override: Optional[dict] = None) -> List[SuiteResult]:
    config = load_config(override)
    results = []
    for suite in SUITES:
        logger.info(f"Running {suite.__name__}...")
        results.append(suite(config))
    return results
