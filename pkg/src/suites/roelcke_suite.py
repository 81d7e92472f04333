"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: roelcke_suite.py                                                      │
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
from itertools import combinations
from typing import List
import logging
import random

from src.models.models import BiKatetovMatrix, FiniteMetricSpace, freeze_matrix
from src.schemas.report import Certificate
from src.services.metric_service import make_isometry, random_metric, uniform_space
from src.services.roelcke_service import (
    amalgam,
    compose,
    diagonal_staircase,
    graph_element,
    identity_element,
    idempotent_from_subset,
    is_idempotent,
    is_staircase,
    isometry_from_matrix,
    leq,
    random_bikatetov,
    staircase,
    staircase_compose,
    subset_from_idempotent,
    validate_bikatetov,
)
from src.suites.base import Budget, PropertyTally

logger = logging.getLogger(__name__)

TRIPLES = 500
MAX_POINTS = 5
DENOM = 4
STAIRCASES = 200


def _pointwise_max(p: BiKatetovMatrix, q: BiKatetovMatrix) -> BiKatetovMatrix:
    """The maximum of two Katetov functions is Katetov, so this stays valid"""
    return BiKatetovMatrix(
        left=p.left,
        right=p.right,
        p=freeze_matrix(
            [
                [max(a, b) for a, b in zip(row_p, row_q)]
                for row_p, row_q in zip(p.p, q.p)
            ]
        ),
    )


def _random_staircase(n: int, rng: random.Random):
    down = set(rng.sample(range(2 * n), n))
    i = j = 0
    cells = [(0, 0)]
    for step in range(2 * n):
        if step in down:
            i += 1
        else:
            j += 1
        cells.append((i, j))
    return staircase(n, cells)


def _check_laws(tally: PropertyTally, case: int, rng: random.Random) -> None:
    spaces: List[FiniteMetricSpace] = [
        random_metric(rng.randint(1, MAX_POINTS), DENOM, seed=rng.randrange(2**32))
        for _ in range(4)
    ]
    x, y, z, w = spaces
    p = random_bikatetov(x, y, seed=rng.randrange(2**32), denom_bound=DENOM)
    q = random_bikatetov(y, z, seed=rng.randrange(2**32), denom_bound=DENOM)
    t = random_bikatetov(z, w, seed=rng.randrange(2**32), denom_bound=DENOM)

    pq = compose(p, q)
    tally.check(
        "composition_valid",
        isinstance(validate_bikatetov(x, z, pq.p), BiKatetovMatrix),
        case=case,
    )
    tally.check(
        "composition_associative",
        compose(pq, t).p == compose(p, compose(q, t)).p,
        case=case,
    )
    tally.check(
        "identity_two_sided_unit",
        compose(identity_element(x), p).p == p.p
        and compose(p, identity_element(y)).p == p.p,
        case=case,
    )

    p2 = _pointwise_max(
        p, random_bikatetov(x, y, seed=rng.randrange(2**32), denom_bound=DENOM)
    )
    q2 = _pointwise_max(
        q, random_bikatetov(y, z, seed=rng.randrange(2**32), denom_bound=DENOM)
    )
    tally.check(
        "composition_monotone",
        leq(p, p2) and leq(q, q2) and leq(pq, compose(p2, q2)),
        case=case,
    )

    glued = amalgam(p)
    right = glued.right_embedding.as_dict()
    tally.check(
        "amalgam_realizes_matrix",
        all(
            glued.space.d[a][right[b]] == p.p[a][b]
            for a in x.points()
            for b in y.points()
        ),
        case=case,
    )

    for size in range(1, x.n + 1):
        for subset in combinations(x.points(), size):
            e = idempotent_from_subset(x, subset)
            tally.check(
                "subset_idempotent_round_trip",
                is_idempotent(e) and subset_from_idempotent(e) == list(subset),
                case=case,
                subset=list(subset),
            )


def _check_graphs(tally: PropertyTally, case: int, rng: random.Random) -> None:
    n = rng.randint(1, MAX_POINTS)
    space = uniform_space(n, Fraction(rng.randint(1, DENOM), DENOM))
    g_images = list(range(n))
    h_images = list(range(n))
    rng.shuffle(g_images)
    rng.shuffle(h_images)
    g = make_isometry(space, space, dict(enumerate(g_images)))
    h = make_isometry(space, space, dict(enumerate(h_images)))
    h_after_g = make_isometry(
        space, space, {i: h_images[g_images[i]] for i in range(n)}
    )
    tally.check(
        "graph_elements_reverse_group_law",
        compose(graph_element(space, g), graph_element(space, h)).p
        == graph_element(space, h_after_g).p,
        case=case,
    )
    recovered = isometry_from_matrix(graph_element(space, g))
    tally.check(
        "graph_element_recovers_isometry",
        recovered is not None and recovered.images() == g_images,
        case=case,
    )


def run_roelcke_suite(seed: int, budget: Budget) -> List[Certificate]:
    tally = PropertyTally(
        suite="roelcke",
        bound=f"{TRIPLES} triples n <= {MAX_POINTS}, {STAIRCASES} staircase pairs",
    )
    rng = random.Random(seed)
    for case in range(TRIPLES):
        if tally.out_of_budget(budget, case):
            return tally.certificates()
        _check_laws(tally, case, rng)
        _check_graphs(tally, case, rng)

    for case in range(STAIRCASES):
        n = rng.randint(0, 6)
        a = _random_staircase(n, rng)
        b = _random_staircase(n, rng)
        unit = diagonal_staircase(n)
        tally.check(
            "staircase_composite_is_staircase",
            is_staircase(staircase_compose(a, b)),
            case=case,
        )
        tally.check(
            "staircase_diagonal_unit",
            staircase_compose(unit, a) == a and staircase_compose(a, unit) == a,
            case=case,
        )
    logger.info("Roelcke suite finished")
    return tally.certificates()
