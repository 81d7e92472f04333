"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: syndetic_suite.py                                                     │
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

from fractions import Fraction
from math import lcm
from typing import List
import logging
import random

from src.config.settings import settings
from src.models.models import BohrSpec, FiniteGroup
from src.schemas.report import Certificate
from src.services.syndetic_service import (
    bohr_members,
    check_triple_sum_bohr,
    is_syndetic,
    nontrivial_character,
    pestov_witness,
    random_syndetic,
)
from src.suites.base import Budget, PropertyTally
from src.utils.groups import small_groups

logger = logging.getLogger(__name__)

SETS = 50
MAX_GAP = 8
MAX_DENOMINATOR = 12
PERIODIC_WINDOW = 300


def _random_spec(rng: random.Random) -> BohrSpec:
    frequencies = []
    for _ in range(rng.randint(1, 2)):
        q = rng.randint(1, MAX_DENOMINATOR)
        frequencies.append(Fraction(rng.randrange(q), q))
    return BohrSpec(
        frequencies=tuple(frequencies), epsilon=Fraction(rng.randint(1, 8), 4)
    )


def _check_group(tally: PropertyTally, group: FiniteGroup) -> None:
    witness = pestov_witness(group)
    everything = set(range(group.order))
    covered = {group.mul(f, s) for f in witness.F for s in witness.S}
    differences = {
        group.mul(a, group.inverse(b)) for a in witness.S for b in witness.S
    }
    tally.check(
        "pestov_witness",
        not witness.extremely_amenable
        and covered == everything
        and differences != everything
        and sorted(differences) == witness.SS_inverse,
        group=group.name,
    )
    character = nontrivial_character(group)
    tally.check(
        "nontrivial_character",
        character is not None
        and any(character.values.values())
        and all(
            character.values[group.mul(a, b)]
            == (character.values[a] + character.values[b]) % character.modulus
            for a in range(group.order)
            for b in range(group.order)
        ),
        group=group.name,
    )


def run_syndetic_suite(seed: int, budget: Budget) -> List[Certificate]:
    window = settings.SYNDETIC_WINDOW
    tally = PropertyTally(
        suite="syndetic",
        bound=(
            f"{SETS} sets in [-{window}, {window}], gaps <= {MAX_GAP}, "
            f"denominators <= {MAX_DENOMINATOR}; groups of order <= 12"
        ),
    )
    rng = random.Random(seed)
    for case in range(SETS):
        if tally.out_of_budget(budget, case):
            return tally.certificates()
        max_gap = rng.randint(1, MAX_GAP)
        s = random_syndetic(window, max_gap, seed=rng.randrange(2**32))
        gaps = is_syndetic(s)
        tally.check(
            "random_sets_syndetic",
            gaps.syndetic and gaps.max_gap is not None and gaps.max_gap <= max_gap,
            case=case,
        )
        spec = _random_spec(rng)
        report = check_triple_sum_bohr(s, spec)
        tally.check(
            "triple_sum_contains_bohr_set",
            report.holds,
            case=case,
            violations=report.violations[:10],
        )

        period = 1
        for theta in spec.frequencies:
            period = lcm(period, theta.denominator)
        members = bohr_members(spec, PERIODIC_WINDOW)
        tally.check(
            "bohr_set_periodic",
            0 in members
            and all(
                (m + period in members)
                for m in members.members
                if m + period <= PERIODIC_WINDOW
            ),
            case=case,
            period=period,
        )

    trivial = FiniteGroup(table=((0,),), identity=0, name="C1")
    tally.check(
        "trivial_group_extremely_amenable",
        pestov_witness(trivial).extremely_amenable
        and nontrivial_character(trivial) is None,
    )
    for group in small_groups():
        _check_group(tally, group)
    logger.info("Syndetic suite finished")
    return tally.certificates()
