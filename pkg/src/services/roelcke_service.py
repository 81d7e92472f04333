"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: roelcke_service.py                                                    │
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
from math import lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union
import logging
import random

from src.core.exceptions import (
    DomainError,
    InternalConsistencyError,
    ShapeError,
)
from src.models.models import (
    AmalgamResult,
    BiKatetovMatrix,
    FiniteMetricSpace,
    PartialIsometry,
    StaircaseRelation,
    freeze_matrix,
)
from src.schemas.report import ViolationReport
from src.services.metric_service import (
    diameter,
    is_isometric_map,
    make_isometry,
    validate_metric,
)
from src.utils.rational import grid

logger = logging.getLogger(__name__)

ONE = Fraction(1)


def _require_unit_diameter(space: FiniteMetricSpace, side: str) -> None:
    if diameter(space) > 1:
        logger.warning(f"{side} space has diameter {diameter(space)} > 1")
        raise DomainError(
            f"The {side} space must have diameter <= 1",
            details={"side": side, "diameter": str(diameter(space))},
        )


def _bikatetov_violation(
    left: FiniteMetricSpace, right: FiniteMetricSpace, p: Sequence[Sequence[Fraction]]
) -> Optional[ViolationReport]:
    for x in left.points():
        row = p[x]
        for y in right.points():
            for y2 in range(y + 1, right.n):
                d = right.d[y][y2]
                if abs(row[y] - row[y2]) > d:
                    return ViolationReport(
                        kind="row_lipschitz",
                        indices=(x, y, y2),
                        message=f"|p({x},{y}) - p({x},{y2})| > d_Y({y},{y2})",
                    )
                if d > row[y] + row[y2]:
                    return ViolationReport(
                        kind="row_sum",
                        indices=(x, y, y2),
                        message=f"d_Y({y},{y2}) > p({x},{y}) + p({x},{y2})",
                    )
    for y in right.points():
        for x in left.points():
            for x2 in range(x + 1, left.n):
                d = left.d[x][x2]
                if abs(p[x][y] - p[x2][y]) > d:
                    return ViolationReport(
                        kind="column_lipschitz",
                        indices=(x, x2, y),
                        message=f"|p({x},{y}) - p({x2},{y})| > d_X({x},{x2})",
                    )
                if d > p[x][y] + p[x2][y]:
                    return ViolationReport(
                        kind="column_sum",
                        indices=(x, x2, y),
                        message=f"d_X({x},{x2}) > p({x},{y}) + p({x2},{y})",
                    )
    return None


def _pseudometric_union(m: BiKatetovMatrix) -> List[List[Fraction]]:
    nx, ny = m.left.n, m.right.n
    size = nx + ny
    d = [[Fraction(0)] * size for _ in range(size)]
    for i in range(nx):
        for j in range(nx):
            d[i][j] = m.left.d[i][j]
    for i in range(ny):
        for j in range(ny):
            d[nx + i][nx + j] = m.right.d[i][j]
    for x in range(nx):
        for y in range(ny):
            d[x][nx + y] = m.p[x][y]
            d[nx + y][x] = m.p[x][y]
    return d


def validate_bikatetov(
    left: FiniteMetricSpace,
    right: FiniteMetricSpace,
    p: Sequence[Sequence[Union[Fraction, int, str]]],
) -> Union[BiKatetovMatrix, ViolationReport]:
    """
    Check that p: X x Y -> [0,1] is Katetov along every row (over Y) and every
    column (over X). A valid matrix is cross-checked by assembling the
    pseudometric on X + Y that it describes.
    """
    _require_unit_diameter(left, "left")
    _require_unit_diameter(right, "right")
    if len(p) != left.n or any(len(row) != right.n for row in p):
        raise ShapeError(
            f"p must be {left.n}x{right.n}",
            details={"rows": len(p), "row_lengths": [len(row) for row in p]},
        )
    matrix = freeze_matrix(p)
    for x in left.points():
        for y in right.points():
            if not 0 <= matrix[x][y] <= 1:
                raise DomainError(
                    f"p({x},{y}) = {matrix[x][y]} is outside [0,1]",
                    details={"pair": [x, y]},
                )
    violation = _bikatetov_violation(left, right, matrix)
    if violation is not None:
        return violation

    m = BiKatetovMatrix(left=left, right=right, p=matrix)
    cross = validate_metric(_pseudometric_union(m), pseudometric=True)
    if isinstance(cross, ViolationReport):
        raise InternalConsistencyError(
            f"Valid bi-Katetov matrix gave a non-metric amalgam: {cross.message}"
        )
    return m


def require_bikatetov(
    left: FiniteMetricSpace,
    right: FiniteMetricSpace,
    p: Sequence[Sequence[Union[Fraction, int, str]]],
) -> BiKatetovMatrix:
    result = validate_bikatetov(left, right, p)
    if isinstance(result, ViolationReport):
        raise DomainError(
            f"Not a bi-Katetov matrix: {result.message}",
            details={"kind": result.kind, "indices": list(result.indices)},
        )
    return result


def amalgam(m: BiKatetovMatrix) -> AmalgamResult:
    """
    Metric on X + Y with d(x,y) = p(x,y). A point y at cross-distance 0 from x
    is identified with x; the remaining points of Y follow X in index order.
    """
    nx = m.left.n
    right_images: Dict[int, int] = {}
    next_point = nx
    for y in m.right.points():
        zero = next((x for x in m.left.points() if m.p[x][y] == 0), None)
        if zero is not None:
            right_images[y] = zero
        else:
            right_images[y] = next_point
            next_point += 1

    union = _pseudometric_union(m)
    # union row index of each point kept in the quotient
    keep = list(range(nx)) + [
        nx + y for y in m.right.points() if right_images[y] >= nx
    ]
    d = [[union[i][j] for j in keep] for i in keep]
    labels = None
    if m.left.labels is not None and m.right.labels is not None:
        labels = list(m.left.labels) + [
            m.right.labels[y] for y in m.right.points() if right_images[y] >= nx
        ]
    space = validate_metric(d, labels=labels)
    if isinstance(space, ViolationReport):
        raise InternalConsistencyError(f"Amalgam is not a metric: {space.message}")
    if diameter(space) > 1:
        raise InternalConsistencyError("Amalgam has diameter > 1")

    left_embedding = make_isometry(m.left, space, {x: x for x in m.left.points()})
    right_embedding = make_isometry(m.right, space, right_images)
    if not is_isometric_map(left_embedding) or not is_isometric_map(right_embedding):
        raise InternalConsistencyError("Amalgam copies are not isometric")
    return AmalgamResult(
        space=space, left_embedding=left_embedding, right_embedding=right_embedding
    )


def compose(p: BiKatetovMatrix, q: BiKatetovMatrix) -> BiKatetovMatrix:
    """r(x,y) = min(1, min_z p(x,z) + q(z,y)), reduced over z ascending"""
    if not p.right.same_metric(q.left):
        raise DomainError(
            "Middle spaces differ", details={"p_right": p.right.n, "q_left": q.left.n}
        )
    middle = range(p.right.n)
    r = []
    for x in p.left.points():
        row = []
        for y in q.right.points():
            best = ONE
            for z in middle:
                candidate = p.p[x][z] + q.p[z][y]
                if candidate < best:
                    best = candidate
            row.append(best)
        r.append(tuple(row))
    return BiKatetovMatrix(left=p.left, right=q.right, p=tuple(r))


def identity_element(space: FiniteMetricSpace) -> BiKatetovMatrix:
    _require_unit_diameter(space, "left")
    return BiKatetovMatrix(left=space, right=space, p=space.d)


def graph_element(space: FiniteMetricSpace, g: PartialIsometry) -> BiKatetovMatrix:
    """p_g(x,y) = d(g(x), y)"""
    _require_unit_diameter(space, "left")
    if (
        not g.is_bijective
        or not g.source.same_metric(space)
        or not g.target.same_metric(space)
        or not is_isometric_map(g)
    ):
        raise DomainError("graph_element needs an isometry of the space")
    images = g.images()
    return BiKatetovMatrix(
        left=space,
        right=space,
        p=tuple(
            tuple(space.d[images[x]][y] for y in space.points())
            for x in space.points()
        ),
    )


def isometry_from_matrix(m: BiKatetovMatrix) -> Optional[PartialIsometry]:
    """The isometry g with m = p_g, or None when m is not a graph element"""
    if not m.left.same_metric(m.right):
        return None
    images = []
    for x in m.left.points():
        zeros = [y for y in m.right.points() if m.p[x][y] == 0]
        if len(zeros) != 1:
            return None
        images.append(zeros[0])
    if len(set(images)) != len(images):
        return None
    g = make_isometry(m.left, m.right, dict(enumerate(images)))
    if not is_isometric_map(g):
        return None
    if graph_element(m.left, g).p != m.p:
        return None
    return g


def idempotent_from_subset(
    space: FiniteMetricSpace, subset: Sequence[int]
) -> BiKatetovMatrix:
    """p_A(x,y) = min(1, min_a d(x,a) + d(a,y))"""
    _require_unit_diameter(space, "left")
    points = sorted(set(subset))
    if not points:
        raise DomainError("idempotent_from_subset needs a nonempty subset")
    if points[0] < 0 or points[-1] >= space.n:
        raise DomainError("Subset contains points outside the space")
    p = tuple(
        tuple(
            min([ONE] + [space.d[x][a] + space.d[a][y] for a in points])
            for y in space.points()
        )
        for x in space.points()
    )
    return BiKatetovMatrix(left=space, right=space, p=p)


def is_idempotent(m: BiKatetovMatrix) -> bool:
    return m.left.same_metric(m.right) and compose(m, m).p == m.p


def subset_from_idempotent(m: BiKatetovMatrix) -> List[int]:
    """{x : p(x,x) = 0} for an idempotent over X x X"""
    if not m.left.same_metric(m.right):
        raise DomainError("subset_from_idempotent needs a matrix over X x X")
    if not is_idempotent(m):
        raise DomainError("Matrix is not idempotent")
    return [x for x in m.left.points() if m.p[x][x] == 0]


def leq(p: BiKatetovMatrix, q: BiKatetovMatrix) -> bool:
    """Pointwise order on matrices over the same pair of spaces"""
    if not p.left.same_metric(q.left) or not p.right.same_metric(q.right):
        raise DomainError("leq needs matrices over the same spaces")
    return all(
        p.p[x][y] <= q.p[x][y] for x in p.left.points() for y in p.right.points()
    )


def enumerate_grid_idempotents(
    space: FiniteMetricSpace, delta: Fraction
) -> List[Tuple[BiKatetovMatrix, Optional[List[int]]]]:
    """
    Every bi-Katetov matrix over X x X with entries in {0, delta, ..., 1} that
    is idempotent, paired with the subset A when it equals p_A (else None).
    Exponential in |X|^2; meant for spaces of two or three points.
    """
    _require_unit_diameter(space, "left")
    if delta <= 0:
        raise DomainError("Grid step must be positive")
    values = grid(delta, ONE)
    n = space.n
    cells = [(x, y) for x in range(n) for y in range(n)]
    current = [[Fraction(0)] * n for _ in range(n)]
    known: Dict[Tuple[Tuple[Fraction, ...], ...], List[int]] = {}
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            known[idempotent_from_subset(space, subset).p] = list(subset)

    results: List[Tuple[BiKatetovMatrix, Optional[List[int]]]] = []

    def fits(x: int, y: int, v: Fraction) -> bool:
        for y2 in range(y):
            a = current[x][y2]
            d = space.d[y][y2]
            if abs(v - a) > d or d > v + a:
                return False
        for x2 in range(x):
            a = current[x2][y]
            d = space.d[x][x2]
            if abs(v - a) > d or d > v + a:
                return False
        return True

    def extend(k: int) -> None:
        if k == len(cells):
            m = BiKatetovMatrix(left=space, right=space, p=freeze_matrix(current))
            if is_idempotent(m):
                results.append((m, known.get(m.p)))
            return
        x, y = cells[k]
        for v in values:
            if fits(x, y, v):
                current[x][y] = v
                extend(k + 1)
        current[x][y] = Fraction(0)

    extend(0)
    unmatched = sum(1 for _, subset in results if subset is None)
    logger.info(
        f"Found {len(results)} grid idempotents on {n} points "
        f"({unmatched} without a subset)"
    )
    return results


def random_bikatetov(
    left: FiniteMetricSpace,
    right: FiniteMetricSpace,
    seed: int = 0,
    denom_bound: int = 4,
) -> BiKatetovMatrix:
    """
    Sample a valid matrix one entry at a time, column by column.

    Each entry p(x_i, y_k) is drawn uniformly from the grid points of the
    interval cut out by the entries already placed in its row and column
    (the Katetov conditions), capped at 1. The grid is fine enough to contain
    both interval ends, so the interval is never empty.
    """
    _require_unit_diameter(left, "left")
    _require_unit_diameter(right, "right")
    denominator = denom_bound
    for space in (left, right):
        for row in space.d:
            for v in row:
                denominator = lcm(denominator, v.denominator)
    step = Fraction(1, denominator)
    rng = random.Random(seed)
    p = [[Fraction(0)] * right.n for _ in range(left.n)]

    for y in right.points():
        for x in left.points():
            low = Fraction(0)
            high = ONE
            for x2 in range(x):
                d = left.d[x][x2]
                low = max(low, abs(d - p[x2][y]))
                high = min(high, d + p[x2][y])
            for y2 in range(y):
                d = right.d[y][y2]
                low = max(low, abs(d - p[x][y2]))
                high = min(high, d + p[x][y2])
            k_low = -((-low) // step)
            k_high = high // step
            if k_low > k_high:
                raise InternalConsistencyError(
                    f"Empty interval for entry ({x}, {y}) of a random matrix"
                )
            p[x][y] = rng.randint(k_low, k_high) * step
    return BiKatetovMatrix(left=left, right=right, p=freeze_matrix(p))


def staircase(n: int, cells) -> StaircaseRelation:
    return StaircaseRelation(n=n, cells=frozenset((int(i), int(j)) for i, j in cells))


def diagonal_staircase(n: int) -> StaircaseRelation:
    """(0,0), (1,0), (1,1), (2,1), ..., (n,n): unit for staircase_compose"""
    cells: Set[Tuple[int, int]] = {(i, i) for i in range(n + 1)}
    cells.update((i + 1, i) for i in range(n))
    return StaircaseRelation(n=n, cells=frozenset(cells))


def is_staircase(rel: StaircaseRelation) -> bool:
    """Unit-step monotone lattice path from (0,0) to (n,n)"""
    n = rel.n
    if n < 0:
        return False
    if any(not (0 <= i <= n and 0 <= j <= n) for i, j in rel.cells):
        return False
    if (0, 0) not in rel.cells or (n, n) not in rel.cells:
        return False
    path = rel.sorted_cells()
    if len(path) != 2 * n + 1:
        return False
    for (i, j), (i2, j2) in zip(path, path[1:]):
        if (i2 - i, j2 - j) not in ((1, 0), (0, 1)):
            return False
    return True


def relational_compose(
    a: StaircaseRelation, b: StaircaseRelation
) -> FrozenSet[Tuple[int, int]]:
    """(i,k) with (i,j) in a and (j,k) in b for some j"""
    if a.n != b.n:
        raise DomainError(
            "Staircases live on different grids", details={"a": a.n, "b": b.n}
        )
    by_source: Dict[int, List[int]] = {}
    for j, k in b.cells:
        by_source.setdefault(j, []).append(k)
    return frozenset((i, k) for i, j in a.cells for k in by_source.get(j, ()))


def staircase_compose(a: StaircaseRelation, b: StaircaseRelation) -> StaircaseRelation:
    """
    Relational composite of two staircases, reduced to a staircase.

    With H(i) the largest k related to i, row i of the result covers
    [H(i-1), H(i)] (H(-1) = 0). This path lies inside the composite and
    equals it whenever the composite is already a staircase. A composite
    holding a 2x2 block has no staircase superset, so no minimal cover exists.
    """
    for rel, name in ((a, "a"), (b, "b")):
        if not is_staircase(rel):
            raise DomainError(f"Argument {name} is not a staircase")
    raw = relational_compose(a, b)
    n = a.n
    top = [max(k for i2, k in raw if i2 == i) for i in range(n + 1)]
    cells = set()
    previous = 0
    for i in range(n + 1):
        cells.update((i, k) for k in range(previous, top[i] + 1))
        previous = top[i]
    result = StaircaseRelation(n=n, cells=frozenset(cells))
    if not result.cells <= raw or not is_staircase(result):
        raise InternalConsistencyError("Staircase reduction left the composite")
    return result
