"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: flows_suite.py                                                        │
│ Developed by: Davidson Gomes                                                 │
│ Creation date: October 18, 2026                                              │
│ Contact: contato@evolution-api.com                                           │
├──────────────────────────────────────────────────────────────────────────────┤
│ @copyright © Evolution API 2025. All rights reserved.                        │
│ Licensed under the Apache License, Version 2.0                               │
│                                                                              │
│ You may not use this file except in compliance with the License.             │
│ You may obtain a copy of the License at                                      │
│                                                                              │
│    http://www.apache.org/licenses/LICENSE-2.0                                │
│                                                                              │
│ Unless required by applicable law or agreed to in writing, software          │
│ distributed under the License is distributed on an "AS IS" BASIS,            │
│ WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.     │
│ See the License for the specific language governing permissions and          │
│ limitations under the License.                                               │
├──────────────────────────────────────────────────────────────────────────────┤
│ @important                                                                   │
│ For any future changes to the code in this file, it is recommended to        │
│ include, together with the modification, the information of the developer    │
│ who changed it and the date of modification.                                 │
└──────────────────────────────────────────────────────────────────────────────┘
"""

from itertools import product
from math import factorial
from typing import Dict, List, Sequence
import logging
import random

from sympy.combinatorics import AlternatingGroup, CyclicGroup, SymmetricGroup

from src.core.exceptions import GenerationError
from src.models.models import TransformationSemigroup
from src.schemas.report import Certificate
from src.services.flows_service import (
    binary_laminar_family,
    binary_tree_automorphisms,
    brute_force_closure,
    brute_force_minimal_left_ideals,
    chain_target,
    equivariant_maps,
    equivariant_self_maps,
    find_idempotent,
    fixed_points,
    generate_semigroup,
    is_free,
    is_idempotent_map,
    is_k_transitive,
    laminar_chain_map,
    linear_orders_flow,
    minimal_left_ideals,
    random_selfmaps,
    regular_action,
    symmetric_action,
    verify_ideal_structure,
)
from src.suites.base import Budget, PropertyTally
from src.utils.groups import action_from_permutation_group, small_groups

logger = logging.getLogger(__name__)

GENERATOR_SETS = 1000
MAX_POINTS = 6
MAX_GENERATORS = 3
SEMIGROUP_LIMIT = 512
ORACLE_MAX_POINTS = 5
ORACLE_MAX_IDEAL = 6
CLOSURE_ORACLE_SIZE = 32
BRUTE_IDEALS_SIZE = 16


def _ideals_by_characterization(S: TransformationSemigroup) -> List[List[int]]:
    """The sets L = S.x with S.y = L for every y in L"""
    multiples = [frozenset(S.mul(t, x) for t in range(len(S))) for x in range(len(S))]
    found = {m for m in multiples if all(multiples[y] == m for y in m)}
    return sorted(sorted(m) for m in found)


def _brute_equivariant_self_maps(
    S: TransformationSemigroup, members: Sequence[int]
) -> List[Dict[int, int]]:
    found = []
    for images in product(members, repeat=len(members)):
        f = dict(zip(members, images))
        if all(
            f[S.mul(s, x)] == S.mul(s, f[x]) for s in range(len(S)) for x in members
        ):
            found.append(f)
    return found


def _items(f: Dict[int, int]):
    return tuple(sorted(f.items()))


def _check_semigroup(
    tally: PropertyTally, case: int, n: int, S: TransformationSemigroup, generators
) -> None:
    power = find_idempotent(S, method="power")
    ellis = find_idempotent(S, method="ellis")
    tally.check(
        "both_algorithms_find_idempotents",
        is_idempotent_map(power)
        and is_idempotent_map(ellis)
        and power in S.index
        and ellis in S.index,
        case=case,
    )
    if len(S) <= CLOSURE_ORACLE_SIZE:
        tally.check(
            "closure_matches_oracle",
            set(S.elements) == brute_force_closure(generators),
            case=case,
        )

    ideals = minimal_left_ideals(S)
    tally.check("minimal_ideal_exists", bool(ideals), case=case)
    tally.check(
        "minimal_ideals_match_characterization",
        ideals == _ideals_by_characterization(S),
        case=case,
        size=len(S),
    )
    if len(S) <= BRUTE_IDEALS_SIZE:
        tally.check(
            "minimal_ideals_match_oracle",
            sorted(ideals) == sorted(brute_force_minimal_left_ideals(S)),
            case=case,
        )
    for ideal in ideals:
        report = verify_ideal_structure(S, ideal, ideals)
        for cert in report.certificates:
            tally.check(cert.property, cert.passed, case=case, ideal=report.ideal)
        if n <= ORACLE_MAX_POINTS and len(ideal) <= ORACLE_MAX_IDEAL:
            expected = _brute_equivariant_self_maps(S, sorted(ideal))
            found = equivariant_self_maps(S, ideal)
            tally.check(
                "equivariant_maps_match_oracle",
                sorted(map(_items, found)) == sorted(map(_items, expected)),
                case=case,
                ideal=sorted(ideal),
            )


def _check_obstruction(tally: PropertyTally) -> None:
    for n in range(3, 7):
        action = symmetric_action(n)
        _, target = chain_target(action)
        tally.check(
            "symmetric_actions_have_no_chain_maps",
            is_k_transitive(action, 3) and equivariant_maps(action, target) == [],
            n=n,
            chains=target.n,
        )
    for group in (SymmetricGroup(4), SymmetricGroup(5), AlternatingGroup(5)):
        action = action_from_permutation_group(group)
        _, target = chain_target(action)
        if is_k_transitive(action, 3):
            tally.check(
                "three_transitive_actions_have_no_chain_maps",
                equivariant_maps(action, target) == [],
                order=int(group.order()),
                degree=group.degree,
            )
    for degree in (3, 4, 5):
        action = action_from_permutation_group(CyclicGroup(degree))
        _, target = chain_target(action)
        tally.check(
            "cyclic_actions_admit_chain_maps",
            bool(equivariant_maps(action, target)),
            degree=degree,
        )

    report = laminar_chain_map(binary_laminar_family(3), binary_tree_automorphisms(3))
    tally.check(
        "laminar_chain_map_equivariant",
        report.is_chain and report.equivariant,
        depth=3,
    )


def run_flows_suite(seed: int, budget: Budget) -> List[Certificate]:
    tally = PropertyTally(
        suite="flows",
        bound=(
            f"{GENERATOR_SETS} generator sets n <= {MAX_POINTS}, "
            f"|S| <= {SEMIGROUP_LIMIT}; S_n n = 3..6; linear orders n <= 5"
        ),
    )
    rng = random.Random(seed)
    accepted = 0
    resampled = 0
    while accepted < GENERATOR_SETS:
        if tally.out_of_budget(budget, accepted):
            return tally.certificates()
        n = rng.randint(1, MAX_POINTS)
        generators = random_selfmaps(n, rng.randint(1, MAX_GENERATORS), rng)
        try:
            S = generate_semigroup(generators, limit=SEMIGROUP_LIMIT)
        except GenerationError:
            resampled += 1
            continue
        _check_semigroup(tally, accepted, n, S, generators)
        accepted += 1
    logger.info(f"Checked {accepted} semigroups ({resampled} resampled)")
    tally.annotate(
        "both_algorithms_find_idempotents",
        drawn=accepted + resampled,
        resampled=resampled,
    )

    _check_obstruction(tally)

    for n in range(1, 6):
        flow = linear_orders_flow(n)
        tally.check(
            "linear_orders_minimal",
            flow.orders == factorial(n)
            and flow.invariant
            and flow.orbits == 1
            and flow.minimal,
            n=n,
            orders=flow.orders,
        )

    for group in small_groups():
        action = regular_action(group)
        tally.check(
            "regular_actions_free",
            is_free(action) and not fixed_points(action),
            group=group.name,
        )
    logger.info("Flows suite finished")
    return tally.certificates()
