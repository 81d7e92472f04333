"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: katetov_service.py                                                    │
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
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging
import random

from src.config.settings import settings
from src.core.exceptions import (
    DomainError,
    InternalConsistencyError,
    PreconditionError,
)
from src.models.models import (
    ExtensionStep,
    FiniteMetricSpace,
    KatetovFunction,
    PartialIsometry,
)
from src.schemas.katetov import FullStrategy, SampledStrategy, Strategy
from src.schemas.report import ViolationReport
from src.services.metric_service import (
    diameter,
    is_isometric_map,
    make_isometry,
    restrict,
    validate_metric,
)
from src.utils.rational import grid, to_rational

logger = logging.getLogger(__name__)

ValueMap = Union[Sequence[Fraction], Mapping[int, Fraction]]


def _values_on(
    space: FiniteMetricSpace, points: Sequence[int], f: ValueMap
) -> List[Fraction]:
    if isinstance(f, Mapping):
        missing = [x for x in points if x not in f]
        if missing:
            raise DomainError(
                f"Missing value for point {missing[0]}", details={"missing": missing}
            )
        values = [Fraction(f[x]) for x in points]
    else:
        if len(f) != len(points):
            raise DomainError(
                f"Expected {len(points)} values, got {len(f)}",
                details={"points": list(points)},
            )
        values = [Fraction(v) for v in f]
    for x, v in zip(points, values):
        if v < 0:
            raise DomainError(f"Negative value at point {x}", details={"point": x})
    return values


def _first_violation(
    space: FiniteMetricSpace, points: Sequence[int], values: Sequence[Fraction]
) -> Optional[ViolationReport]:
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            x, y = points[a], points[b]
            d = space.d[x][y]
            fx, fy = values[a], values[b]
            if abs(fx - fy) > d:
                return ViolationReport(
                    kind="lipschitz",
                    indices=(x, y),
                    message=f"|f({x}) - f({y})| = {abs(fx - fy)} > d = {d}",
                )
            if d > fx + fy:
                return ViolationReport(
                    kind="sum",
                    indices=(x, y),
                    message=f"f({x}) + f({y}) = {fx + fy} < d = {d}",
                )
    return None


def is_katetov(space: FiniteMetricSpace, f: ValueMap) -> Union[bool, ViolationReport]:
    """
    True iff |f(x) - f(y)| <= d(x,y) <= f(x) + f(y) for all pairs, otherwise
    the first violating pair (lexicographic) and the failing inequality.
    """
    points = list(space.points())
    values = _values_on(space, points, f)
    violation = _first_violation(space, points, values)
    return True if violation is None else violation


def make_function(
    space: FiniteMetricSpace, support: Sequence[int], values: Sequence[Fraction]
) -> KatetovFunction:
    """Build a Katetov function on `support`, rejecting non-Katetov values"""
    points = sorted(support)
    if not points:
        raise DomainError("Katetov functions need a nonempty base")
    if len(set(points)) != len(points):
        raise DomainError("Repeated points in the base")
    order = sorted(range(len(support)), key=lambda k: support[k])
    ordered = _values_on(space, points, [values[k] for k in order])
    violation = _first_violation(space, points, ordered)
    if violation is not None:
        raise PreconditionError(
            f"Not a Katetov function: {violation.message}",
            details={"kind": violation.kind, "indices": list(violation.indices)},
        )
    return KatetovFunction(base=space, support=tuple(points), values=tuple(ordered))


def point_function(space: FiniteMetricSpace, x: int) -> KatetovFunction:
    """h_x(y) = d(x, y)"""
    if not 0 <= x < space.n:
        raise DomainError(f"Point {x} is not in the space")
    return KatetovFunction(
        base=space, support=tuple(space.points()), values=tuple(space.d[x])
    )


def kuratowski_embedding(space: FiniteMetricSpace) -> List[KatetovFunction]:
    """x -> h_x, an isometric embedding of X into E(X) with the sup-metric"""
    return [point_function(space, x) for x in space.points()]


def kappa_extend(
    space: FiniteMetricSpace,
    subset: Sequence[int],
    f: Union[KatetovFunction, ValueMap],
) -> KatetovFunction:
    """
    g(x) = min over y in Y of d(x,y) + f(y).

    `f` is either a KatetovFunction supported on Y, or raw values aligned with
    sorted(Y) (a sequence) or keyed by point (a mapping).
    """
    points = sorted(set(subset))
    if not points:
        raise DomainError("kappa_extend needs a nonempty subset Y")
    if isinstance(f, KatetovFunction):
        if list(f.support) != points:
            raise DomainError(
                "Function support does not match Y",
                details={"support": list(f.support), "Y": points},
            )
        values = list(f.values)
    else:
        values = _values_on(space, points, f)
    violation = _first_violation(space, points, values)
    if violation is not None:
        raise PreconditionError(
            f"kappa_extend needs a Katetov function on Y: {violation.message}",
            details={"kind": violation.kind, "indices": list(violation.indices)},
        )
    extended = tuple(
        min(space.d[x][y] + v for y, v in zip(points, values)) for x in space.points()
    )
    return KatetovFunction(base=space, support=tuple(space.points()), values=extended)


def sup_distance(f: KatetovFunction, g: KatetovFunction) -> Fraction:
    """max over the common base of |f - g|"""
    if f.support != g.support or not f.base.same_metric(g.base):
        raise DomainError("sup_distance needs functions on the same base")
    return max(abs(a - b) for a, b in zip(f.values, g.values))


def adjoin(
    space: FiniteMetricSpace, functions: Sequence[KatetovFunction]
) -> ExtensionStep:
    """
    Add one point per Katetov function.

    The new point p_f sits at distance f(x) from x and at sup-distance from the
    other new points. A function with a zero value at x equals h_x and merges
    into x; functions equal as value maps merge into one point.
    """
    n = space.n
    values_to_point: Dict[Tuple[Fraction, ...], int] = {}
    new_values: List[Tuple[Fraction, ...]] = []
    adjoined: List[Tuple[KatetovFunction, int]] = []
    merged: List[Tuple[int, int]] = []

    for index, f in enumerate(functions):
        if not f.is_full or not f.base.same_metric(space):
            raise DomainError(
                "adjoin needs functions defined on every point of the space",
                details={"function": index},
            )
        violation = _first_violation(space, f.support, f.values)
        if violation is not None:
            raise PreconditionError(
                f"adjoin needs Katetov functions: {violation.message}",
                details={"function": index, "indices": list(violation.indices)},
            )
        zero = next((x for x, v in zip(f.support, f.values) if v == 0), None)
        if zero is not None:
            adjoined.append((f, zero))
            merged.append((index, zero))
            continue
        if f.values in values_to_point:
            point = values_to_point[f.values]
            adjoined.append((f, point))
            merged.append((index, point))
            continue
        point = n + len(new_values)
        values_to_point[f.values] = point
        new_values.append(f.values)
        adjoined.append((f, point))

    size = n + len(new_values)
    d = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            d[i][j] = space.d[i][j]
    for a, values in enumerate(new_values):
        p = n + a
        for x in range(n):
            d[p][x] = values[x]
            d[x][p] = values[x]
        for b in range(a):
            q = n + b
            dist = max(abs(u - v) for u, v in zip(values, new_values[b]))
            d[p][q] = dist
            d[q][p] = dist

    labels = None
    if space.labels is not None:
        labels = list(space.labels) + [f"p{n + a}" for a in range(len(new_values))]
    after = validate_metric(d, labels=labels)
    if isinstance(after, ViolationReport):
        raise InternalConsistencyError(f"adjoin produced a non-metric: {after.message}")

    embedding = make_isometry(space, after, {x: x for x in space.points()})
    logger.debug(
        f"Adjoined {len(new_values)} points to a {n}-point space "
        f"({len(merged)} merged)"
    )
    return ExtensionStep(
        before=space,
        after=after,
        embedding=embedding,
        adjoined=tuple(adjoined),
        merged=tuple(merged),
    )


def one_point_extension(
    space: FiniteMetricSpace,
    k_space: FiniteMetricSpace,
    subset: Sequence[int],
    phi: PartialIsometry,
) -> Tuple[ExtensionStep, PartialIsometry]:
    """
    Extend an isometric embedding phi: L -> X to K = L + {q} inside X*.

    `phi` maps restrict(K, L) (points numbered in the order of sorted L) into
    `space`. Returns the extension step and the exact embedding of K into
    step.after.
    """
    checked = validate_metric(k_space.d)
    if isinstance(checked, ViolationReport):
        raise PreconditionError(
            f"K is not a metric space: {checked.message}",
            details={"kind": checked.kind, "indices": list(checked.indices)},
        )
    l_points = sorted(set(subset))
    if not l_points:
        raise DomainError("L must be nonempty")
    if any(not 0 <= x < k_space.n for x in l_points):
        raise DomainError("L must be a subset of K")
    rest = [x for x in k_space.points() if x not in set(l_points)]
    if len(rest) != 1:
        raise DomainError(
            f"|K \\ L| must be 1, got {len(rest)}", details={"outside": rest}
        )
    (q,) = rest

    l_space = restrict(k_space, l_points)
    if not phi.is_total or not phi.source.same_metric(l_space):
        raise PreconditionError("phi must be a total map defined on restrict(K, L)")
    if not phi.target.same_metric(space) or not is_isometric_map(phi):
        raise PreconditionError("phi must be an isometric embedding of L into X")

    images = phi.images()
    requested = {images[a]: k_space.d[q][l_points[a]] for a in range(len(l_points))}
    g = kappa_extend(space, sorted(requested), requested)
    step = adjoin(space, [g])
    new_point = step.adjoined[0][1]

    mapping = {l_points[a]: step.embedding(images[a]) for a in range(len(l_points))}
    mapping[q] = new_point
    embedding = make_isometry(k_space, step.after, mapping)
    if not is_isometric_map(embedding):
        raise InternalConsistencyError("one-point extension is not isometric")
    return step, embedding


def grid_katetov_functions(
    space: FiniteMetricSpace,
    subset: Sequence[int],
    delta: Fraction,
    cap: Fraction,
) -> List[Tuple[Fraction, ...]]:
    """All Katetov value maps on `subset` with values in {0, delta, ..., cap}"""
    if delta <= 0 or cap <= 0:
        raise DomainError("Grid step and cap must be positive")
    points = sorted(subset)
    values = grid(delta, cap)
    results: List[Tuple[Fraction, ...]] = []
    chosen: List[Fraction] = []

    def extend(k: int) -> None:
        if k == len(points):
            results.append(tuple(chosen))
            return
        x = points[k]
        for v in values:
            ok = True
            for a in range(k):
                d = space.d[x][points[a]]
                if abs(v - chosen[a]) > d or d > v + chosen[a]:
                    ok = False
                    break
            if ok:
                chosen.append(v)
                extend(k + 1)
                chosen.pop()

    extend(0)
    return results


def _subsets(points: Sequence[int], max_size: int):
    for size in range(1, max_size + 1):
        for subset in combinations(points, size):
            yield subset


def _full_requests(space: FiniteMetricSpace, strategy: FullStrategy):
    for subset in _subsets(list(space.points()), strategy.max_subset):
        for values in grid_katetov_functions(
            space, subset, strategy.delta, strategy.cap
        ):
            yield subset, values


def _sample_request(
    space: FiniteMetricSpace, strategy: SampledStrategy, rng: random.Random
):
    size = rng.randint(1, min(strategy.max_subset, space.n))
    subset = tuple(sorted(rng.sample(range(space.n), size)))
    values = grid(strategy.delta, strategy.cap)
    chosen: List[Fraction] = []
    for k, x in enumerate(subset):
        allowed = [
            v
            for v in values
            if all(
                abs(v - chosen[a]) <= space.d[x][subset[a]] <= v + chosen[a]
                for a in range(k)
            )
        ]
        if not allowed:
            return None
        chosen.append(rng.choice(allowed))
    return subset, tuple(chosen)


def _sampled_requests(
    space: FiniteMetricSpace, strategy: SampledStrategy, iteration: int
):
    rng = random.Random(strategy.seed * 1_000_003 + iteration)
    produced = 0
    attempts = 0
    while produced < strategy.count and attempts < strategy.count * 20:
        attempts += 1
        request = _sample_request(space, strategy, rng)
        if request is None:
            continue
        produced += 1
        yield request


def default_strategy(space: FiniteMetricSpace) -> FullStrategy:
    cap = settings.KATETOV_CAP_FACTOR * diameter(space)
    return FullStrategy(
        delta=to_rational(settings.KATETOV_GRID_STEP),
        cap=cap if cap > 0 else Fraction(1),
        max_subset=settings.KATETOV_MAX_SUBSET,
    )


def urysohn_approx(
    seed: FiniteMetricSpace, iterations: int, strategy: Strategy
) -> List[ExtensionStep]:
    """
    Iterate X -> X*: lift every requested grid Katetov function (enumerated
    for FullStrategy, drawn for SampledStrategy) by kappa_extend and adjoin
    the distinct lifts in lexicographic order of their value maps.
    """
    if iterations < 0:
        raise DomainError("iterations must be nonnegative")
    if strategy.delta <= 0 or strategy.cap <= 0:
        raise DomainError("Grid step and cap must be positive")

    steps: List[ExtensionStep] = []
    current = seed
    for iteration in range(iterations):
        if isinstance(strategy, SampledStrategy):
            requests = _sampled_requests(current, strategy, iteration)
        else:
            requests = _full_requests(current, strategy)
        lifted = {
            kappa_extend(current, subset, list(values)).values
            for subset, values in requests
        }
        functions = [
            KatetovFunction(base=current, support=tuple(current.points()), values=v)
            for v in sorted(lifted)
        ]
        step = adjoin(current, functions)
        logger.info(
            f"Urysohn step {iteration + 1}/{iterations}: "
            f"{current.n} -> {step.after.n} points"
        )
        steps.append(step)
        current = step.after
    return steps


def compose_embeddings(steps: Sequence[ExtensionStep]) -> PartialIsometry:
    """Embedding of the first space of the tower into the last one"""
    if not steps:
        raise DomainError("No steps to compose")
    images = list(steps[0].before.points())
    for step in steps:
        lookup = step.embedding.as_dict()
        images = [lookup[x] for x in images]
    return make_isometry(steps[0].before, steps[-1].after, dict(enumerate(images)))


def extension_property_score(
    space: FiniteMetricSpace,
    max_subset: int,
    delta: Fraction,
    cap: Fraction,
    over: Optional[Sequence[int]] = None,
) -> Tuple[Fraction, int, int]:
    """
    Fraction of grid Katetov requests (Y, f) with |Y| <= max_subset that an
    existing point realizes exactly. Subsets range over `over` (default: all
    points). Returns (score, realized, total).
    """
    if delta <= 0 or cap <= 0:
        raise DomainError("Grid step and cap must be positive")
    points = sorted(set(over)) if over is not None else list(space.points())
    realized = 0
    total = 0
    for subset in _subsets(points, max_subset):
        columns = [[space.d[p][y] for y in subset] for p in space.points()]
        witnesses = {tuple(column) for column in columns}
        for values in grid_katetov_functions(space, subset, delta, cap):
            total += 1
            if values in witnesses:
                realized += 1
    score = Fraction(realized, total) if total else Fraction(1)
    return score, realized, total


def extend_isometry(step: ExtensionStep, g: PartialIsometry) -> PartialIsometry:
    """
    Canonical extension of an isometry g of step.before to step.after:
    an adjoined point p_f goes to p_(f o g^-1).
    """
    before = step.before
    if (
        not g.is_bijective
        or not g.source.same_metric(before)
        or not is_isometric_map(g)
    ):
        raise DomainError("g must be an isometry of the space before the step")
    g_images = g.images()
    inverse = [0] * before.n
    for x, y in enumerate(g_images):
        inverse[y] = x

    point_of: Dict[Tuple[Fraction, ...], int] = {}
    for x in before.points():
        point_of[tuple(before.d[x])] = step.embedding(x)
    for f, p in step.adjoined:
        point_of.setdefault(f.values, p)

    embedded = step.embedding.as_dict()
    mapping: Dict[int, int] = {
        embedded[x]: embedded[g_images[x]] for x in before.points()
    }
    for f, p in step.adjoined:
        if p in mapping:
            continue
        moved = tuple(f.values[inverse[y]] for y in before.points())
        if moved not in point_of:
            raise DomainError(
                "The adjoined family is not invariant under g",
                details={"point": p},
            )
        mapping[p] = point_of[moved]
    extended = make_isometry(step.after, step.after, mapping)
    if not extended.is_bijective or not is_isometric_map(extended):
        raise InternalConsistencyError("extended isometry is not an isometry")
    return extended
