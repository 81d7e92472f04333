"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: katetov_suite.py                                                      │
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
from itertools import combinations, product
from typing import List, Sequence, Tuple
import logging
import random

from src.models.models import FiniteMetricSpace, freeze_matrix
from src.schemas.katetov import FullStrategy, SampledStrategy
from src.schemas.report import Certificate
from src.services.katetov_service import (
    compose_embeddings,
    extend_isometry,
    extension_property_score,
    grid_katetov_functions,
    is_katetov,
    kappa_extend,
    kuratowski_embedding,
    one_point_extension,
    sup_distance,
    urysohn_approx,
)
from src.services.metric_service import (
    is_isometric_map,
    isometry_group,
    line_space,
    make_isometry,
    random_metric,
    restrict,
    uniform_space,
)
from src.suites.base import Budget, PropertyTally
from src.utils.rational import grid

logger = logging.getLogger(__name__)

SPACES = 200
MAX_POINTS = 6
MAX_DENOM = 8
GRID_STEP = Fraction(1, 4)
GRID_CAP = Fraction(1)
MAX_SUBSET = 3
SAMPLED_PAIRS = 4
EXTENSIONS_PER_SPACE = 5

CLOSURE_SEEDS = 20
CLOSURE_MAX_POINTS = 4
CLOSURE_STRATEGY = FullStrategy(delta=Fraction(1, 2), cap=Fraction(1), max_subset=2)


def _one_point_space(
    space: FiniteMetricSpace, subset: Sequence[int], values: Sequence[Fraction]
) -> FiniteMetricSpace:
    """restrict(X, L) plus a point q at distances `values` from L"""
    base = restrict(space, subset)
    m = base.n
    rows = [list(base.d[i]) + [values[i]] for i in range(m)]
    rows.append(list(values) + [Fraction(0)])
    return FiniteMetricSpace(d=freeze_matrix(rows))


def _check_space(
    tally: PropertyTally, case: int, space: FiniteMetricSpace, rng: random.Random
) -> None:
    embedded = kuratowski_embedding(space)
    tally.check(
        "kuratowski_isometric",
        all(
            sup_distance(embedded[x], embedded[y]) == space.d[x][y]
            for x in space.points()
            for y in space.points()
        ),
        case=case,
    )

    subsets: List[Tuple[int, ...]] = []
    for size in range(1, min(MAX_SUBSET, space.n) + 1):
        subsets.extend(combinations(space.points(), size))

    for subset in subsets:
        functions = grid_katetov_functions(space, subset, GRID_STEP, GRID_CAP)
        lifted = [kappa_extend(space, subset, list(values)) for values in functions]
        for values, g in zip(functions, lifted):
            extends = all(g.values[y] == v for y, v in zip(subset, values))
            if not tally.check(
                "kappa_extends_exactly", extends, case=case, subset=list(subset)
            ):
                break
            tally.check(
                "kappa_is_katetov", is_katetov(space, g.values) is True, case=case
            )
        if len(functions) < 2:
            continue
        for _ in range(SAMPLED_PAIRS):
            a, b = rng.sample(range(len(functions)), 2)
            on_subset = max(abs(u - v) for u, v in zip(functions[a], functions[b]))
            tally.check(
                "kappa_preserves_sup_distance",
                sup_distance(lifted[a], lifted[b]) == on_subset,
                case=case,
                subset=list(subset),
            )

    for _ in range(EXTENSIONS_PER_SPACE):
        size = rng.randint(1, min(MAX_SUBSET, space.n))
        subset = sorted(rng.sample(range(space.n), size))
        candidates = [
            values
            for values in grid_katetov_functions(space, subset, GRID_STEP, GRID_CAP)
            if all(v > 0 for v in values)
        ]
        values = rng.choice(candidates)
        k_space = _one_point_space(space, subset, values)
        l_points = list(range(size))
        phi = make_isometry(
            restrict(k_space, l_points),
            space,
            {a: subset[a] for a in range(size)},
        )
        step, embedding = one_point_extension(space, k_space, l_points, phi)
        tally.check(
            "one_point_extension_exact",
            is_isometric_map(embedding)
            and step.after.n <= space.n + 1
            and embedding(size) >= space.n,
            case=case,
            subset=subset,
        )


def _count_requests(
    space: FiniteMetricSpace,
    max_subset: int,
    delta: Fraction,
    cap: Fraction,
    over: Sequence[int],
) -> Tuple[int, int]:
    """(realized, total) over all grid value tuples, filtered by the Katetov test"""
    values = grid(delta, cap)
    realized = total = 0
    for size in range(1, max_subset + 1):
        for subset in combinations(sorted(over), size):
            for f in product(values, repeat=size):
                if not all(
                    abs(f[a] - f[b]) <= space.d[y][z] <= f[a] + f[b]
                    for a, y in enumerate(subset)
                    for b, z in enumerate(subset)
                ):
                    continue
                total += 1
                if any(
                    all(space.d[p][y] == v for y, v in zip(subset, f))
                    for p in space.points()
                ):
                    realized += 1
    return realized, total


def _check_score(
    tally: PropertyTally, seed: int, space: FiniteMetricSpace, over: Sequence[int]
) -> Tuple[Fraction, int, int]:
    parameters = (
        CLOSURE_STRATEGY.max_subset,
        CLOSURE_STRATEGY.delta,
        CLOSURE_STRATEGY.cap,
    )
    score, realized, total = extension_property_score(space, *parameters, over=over)
    tally.check(
        "score_matches_brute_count",
        (realized, total) == _count_requests(space, *parameters, over),
        seed=seed,
        points=space.n,
    )
    return score, realized, total


def _check_closure(tally: PropertyTally, seed: int) -> None:
    space = random_metric(
        random.Random(seed).randint(1, CLOSURE_MAX_POINTS), 2, seed=seed
    )
    _check_score(tally, seed, space, list(space.points()))
    (step,) = urysohn_approx(space, 1, CLOSURE_STRATEGY)
    old_points = step.embedding.images()
    score, realized, total = _check_score(tally, seed, step.after, old_points)
    tally.check(
        "one_step_closes_requests",
        score == 1,
        seed=seed,
        realized=realized,
        total=total,
    )


def _check_isometry_extension(tally: PropertyTally, space: FiniteMetricSpace) -> None:
    (step,) = urysohn_approx(space, 1, CLOSURE_STRATEGY)
    embedded = step.embedding.as_dict()
    for g in isometry_group(space):
        extended = extend_isometry(step, g)
        tally.check(
            "isometries_extend",
            extended.is_bijective
            and is_isometric_map(extended)
            and all(
                extended(embedded[x]) == embedded[g(x)] for x in space.points()
            ),
            n=space.n,
            g=g.images(),
        )


def run_katetov_suite(seed: int, budget: Budget) -> List[Certificate]:
    tally = PropertyTally(
        suite="katetov",
        bound=(
            f"{SPACES} metrics n <= {MAX_POINTS}, denom <= {MAX_DENOM}, "
            f"grid 1/4 up to 1, |Y| <= {MAX_SUBSET}; "
            f"{CLOSURE_SEEDS} closure seeds n <= {CLOSURE_MAX_POINTS}"
        ),
    )
    rng = random.Random(seed)
    for case in range(SPACES):
        if tally.out_of_budget(budget, case):
            return tally.certificates()
        space = random_metric(
            rng.randint(1, MAX_POINTS),
            rng.randint(1, MAX_DENOM),
            seed=rng.randrange(2**32),
        )
        _check_space(tally, case, space, rng)

    for offset in range(CLOSURE_SEEDS):
        if tally.out_of_budget(budget, SPACES + offset):
            return tally.certificates()
        _check_closure(tally, seed + offset)

    for space in (uniform_space(3, 1), line_space([0, 1, 2]), line_space([0, 1])):
        _check_isometry_extension(tally, space)

    tower_seed = random_metric(4, 4, seed=seed)
    steps = urysohn_approx(
        tower_seed,
        2,
        SampledStrategy(
            delta=GRID_STEP, cap=GRID_CAP, max_subset=MAX_SUBSET, count=10, seed=seed
        ),
    )
    tally.check(
        "tower_embedding_isometric",
        is_isometric_map(compose_embeddings(steps)),
        sizes=[step.after.n for step in steps],
    )
    logger.info("Katetov suite finished")
    return tally.certificates()
