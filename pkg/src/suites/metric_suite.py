"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: metric_suite.py                                                       │
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
from itertools import combinations, permutations, product
from typing import List, Sequence
import logging
import random

from src.models.models import FiniteMetricSpace, freeze_matrix
from src.schemas.report import Certificate, ViolationReport
from src.services.metric_service import (
    back_and_forth,
    brute_force_isometry,
    is_isometric_map,
    isometric_embeddings,
    isometry_group,
    random_metric,
    restrict,
    validate_metric,
)
from src.suites.base import Budget, PropertyTally

logger = logging.getLogger(__name__)

ISOMETRY_PAIRS = 500
ISOMETRY_MAX_POINTS = 7
RANDOM_METRICS = 1000
RANDOM_MAX_POINTS = 12
SUBSPACE_MAX_POINTS = 6
AXIOM_MAX_POINTS = 3
AXIOM_GRID = (Fraction(0), Fraction(1), Fraction(2))


def _relabel(space: FiniteMetricSpace, perm: List[int]) -> FiniteMetricSpace:
    """The same space with point perm[i] renamed i"""
    n = space.n
    return FiniteMetricSpace(
        d=freeze_matrix(
            [[space.d[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
        )
    )


def _axioms_hold(d: Sequence[Sequence[Fraction]]) -> bool:
    n = len(d)
    pairs = [(i, j) for i in range(n) for j in range(n)]
    return (
        all(d[i][i] == 0 for i in range(n))
        and all(d[i][j] == d[j][i] for i, j in pairs)
        and all(d[i][j] > 0 for i, j in pairs if i != j)
        and all(d[i][k] <= d[i][j] + d[j][k] for i, j in pairs for k in range(n))
    )


def _count_self_isometries(space: FiniteMetricSpace) -> int:
    return sum(
        1
        for perm in permutations(range(space.n))
        if all(
            space.d[perm[i]][perm[j]] == space.d[i][j]
            for i in range(space.n)
            for j in range(i + 1, space.n)
        )
    )


def _check_axiom_grid(tally: PropertyTally) -> None:
    """Every matrix with entries in AXIOM_GRID, n <= AXIOM_MAX_POINTS"""
    for n in range(1, AXIOM_MAX_POINTS + 1):
        for index, entries in enumerate(product(AXIOM_GRID, repeat=n * n)):
            cells = iter(entries)
            d = [[next(cells) for _ in range(n)] for _ in range(n)]
            accepted = not isinstance(validate_metric(d), ViolationReport)
            tally.check(
                "validate_matches_axioms",
                accepted == _axioms_hold(d),
                n=n,
                index=index,
            )


def _check_subspaces(tally: PropertyTally, case: int, space: FiniteMetricSpace) -> None:
    for size in range(1, space.n + 1):
        for subset in combinations(space.points(), size):
            sub = restrict(space, subset)
            tally.check(
                "restrict_keeps_axioms",
                not isinstance(validate_metric(sub.d), ViolationReport)
                and all(
                    sub.d[a][b] == space.d[x][y]
                    for a, x in enumerate(subset)
                    for b, y in enumerate(subset)
                ),
                case=case,
                subset=list(subset),
            )


def run_metric_suite(seed: int, budget: Budget) -> List[Certificate]:
    tally = PropertyTally(
        suite="metric",
        bound=(
            f"{ISOMETRY_PAIRS} pairs n <= {ISOMETRY_MAX_POINTS}, "
            f"{RANDOM_METRICS} metrics n <= {RANDOM_MAX_POINTS}, "
            f"axiom grid 0,1,2 n <= {AXIOM_MAX_POINTS}"
        ),
    )
    rng = random.Random(seed)

    for case in range(ISOMETRY_PAIRS):
        if tally.out_of_budget(budget, case):
            return tally.certificates()
        n = rng.randint(1, ISOMETRY_MAX_POINTS)
        denom = rng.randint(1, 3)
        a = random_metric(n, denom, seed=rng.randrange(2**32))
        if case % 2 == 0:
            perm = list(range(n))
            rng.shuffle(perm)
            b = _relabel(a, perm)
        else:
            b = random_metric(n, denom, seed=rng.randrange(2**32))
        found = back_and_forth(a, b)
        oracle = brute_force_isometry(a, b)
        tally.check(
            "back_and_forth_agrees_with_oracle",
            (found is None) == (oracle is None),
            case=case,
            n=n,
        )
        if found is not None:
            tally.check(
                "back_and_forth_is_isometry", is_isometric_map(found), case=case
            )

    for case in range(RANDOM_METRICS):
        if tally.out_of_budget(budget, ISOMETRY_PAIRS + case):
            return tally.certificates()
        n = rng.randint(1, RANDOM_MAX_POINTS)
        denom = rng.randint(1, 8)
        space = random_metric(n, denom, seed=rng.randrange(2**32))
        checked = validate_metric(space.d)
        tally.check(
            "random_metric_valid",
            not isinstance(checked, ViolationReport),
            case=case,
            n=n,
        )
        tally.check(
            "random_metric_on_grid",
            all((v * denom).denominator == 1 for row in space.d for v in row)
            and all(v <= 1 for row in space.d for v in row),
            case=case,
        )
        if n <= SUBSPACE_MAX_POINTS:
            group = isometry_group(space)
            tally.check(
                "identity_in_isometry_group",
                any(g.images() == list(range(n)) for g in group),
                case=case,
            )
            tally.check(
                "self_embeddings_match_brute_count",
                len(isometric_embeddings(space, space))
                == len(group)
                == _count_self_isometries(space),
                case=case,
                n=n,
            )
            _check_subspaces(tally, case, space)

    _check_axiom_grid(tally)

    logger.info("Metric suite finished")
    return tally.certificates()
