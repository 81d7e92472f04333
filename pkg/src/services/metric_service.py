"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: metric_service.py                                                     │
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
from itertools import permutations
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Union
import logging
import random

from src.core.exceptions import DomainError, GenerationError, ShapeError
from src.models.models import FiniteMetricSpace, PartialIsometry, freeze_matrix
from src.schemas.report import ViolationReport
from src.utils.rational import to_rational

logger = logging.getLogger(__name__)


def _scaled(d: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Rescale a rational matrix to integers over a common denominator"""
    denominator = 1
    for row in d:
        for v in row:
            denominator = lcm(denominator, v.denominator)
    return [[int(v * denominator) for v in row] for row in d]


def validate_metric(
    d: Sequence[Sequence[Union[Fraction, int, str]]],
    labels: Optional[Sequence[str]] = None,
    pseudometric: bool = False,
) -> Union[FiniteMetricSpace, ViolationReport]:
    """
    Check the metric axioms on a square matrix.

    Returns the validated space, or a ViolationReport naming the first
    violated axiom: nonzero diagonal, asymmetry, zero off-diagonal distance
    (allowed when `pseudometric`), then the triangle inequality
    d(i,k) <= d(i,j) + d(j,k) scanned in lexicographic (i, j, k) order.
    """
    n = len(d)
    if n == 0 or any(len(row) != n for row in d):
        raise ShapeError(
            "Distance matrix must be square and nonempty",
            details={"rows": n, "row_lengths": [len(row) for row in d]},
        )
    matrix = [[to_rational(v) for v in row] for row in d]
    for i in range(n):
        for j in range(n):
            if matrix[i][j] < 0:
                logger.warning(f"Negative distance at ({i}, {j})")
                raise DomainError(
                    f"Negative distance d({i},{j}) = {matrix[i][j]}",
                    details={"pair": [i, j]},
                )

    for i in range(n):
        if matrix[i][i] != 0:
            return ViolationReport(
                kind="diagonal", indices=(i,), message=f"d({i},{i}) != 0"
            )
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                return ViolationReport(
                    kind="symmetry", indices=(i, j), message=f"d({i},{j}) != d({j},{i})"
                )
    if not pseudometric:
        for i in range(n):
            for j in range(i + 1, n):
                if matrix[i][j] == 0:
                    return ViolationReport(
                        kind="positivity",
                        indices=(i, j),
                        message=f"d({i},{j}) = 0 for distinct points",
                    )

    scaled = _scaled(matrix)
    for i in range(n):
        row_i = scaled[i]
        for j in range(n):
            d_ij = row_i[j]
            row_j = scaled[j]
            for k in range(n):
                if row_i[k] > d_ij + row_j[k]:
                    return ViolationReport(
                        kind="triangle",
                        indices=(i, j, k),
                        message=f"d({i},{k}) > d({i},{j}) + d({j},{k})",
                    )

    return FiniteMetricSpace(
        d=freeze_matrix(matrix),
        labels=tuple(labels) if labels is not None else None,
        pseudometric=pseudometric,
    )


def require_metric(
    d: Sequence[Sequence[Fraction]],
    labels: Optional[Sequence[str]] = None,
    pseudometric: bool = False,
) -> FiniteMetricSpace:
    """validate_metric for callers that treat a violation as a domain error"""
    result = validate_metric(d, labels=labels, pseudometric=pseudometric)
    if isinstance(result, ViolationReport):
        raise DomainError(
            f"Not a metric: {result.message}",
            details={"kind": result.kind, "indices": list(result.indices)},
        )
    return result


def line_space(coordinates: Iterable[Union[int, Fraction]]) -> FiniteMetricSpace:
    """Points on the real line with d(i,j) = |x_i - x_j|"""
    xs = [Fraction(x) for x in coordinates]
    return FiniteMetricSpace(d=freeze_matrix([[abs(a - b) for b in xs] for a in xs]))


def uniform_space(n: int, distance: Union[int, Fraction] = 1) -> FiniteMetricSpace:
    """n points at pairwise distance `distance` (equilateral simplex)"""
    value = Fraction(distance)
    return FiniteMetricSpace(
        d=freeze_matrix(
            [[Fraction(0) if i == j else value for j in range(n)] for i in range(n)]
        )
    )


def diameter(space: FiniteMetricSpace) -> Fraction:
    return max((max(row) for row in space.d), default=Fraction(0))


def restrict(space: FiniteMetricSpace, subset: Iterable[int]) -> FiniteMetricSpace:
    """Induced submetric on `subset`; point order inherited from `space`"""
    points = sorted(set(subset))
    if not points:
        raise DomainError("Cannot restrict to an empty subset")
    if points[0] < 0 or points[-1] >= space.n:
        raise DomainError(
            "Subset contains points outside the space",
            details={"subset": points, "n": space.n},
        )
    labels = None
    if space.labels is not None:
        labels = tuple(space.labels[i] for i in points)
    return FiniteMetricSpace(
        d=tuple(tuple(space.d[i][j] for j in points) for i in points),
        labels=labels,
        pseudometric=space.pseudometric,
    )


def make_isometry(
    source: FiniteMetricSpace, target: FiniteMetricSpace, mapping: Dict[int, int]
) -> PartialIsometry:
    return PartialIsometry(
        source=source, target=target, mapping=tuple(sorted(mapping.items()))
    )


def is_isometric_map(iso: PartialIsometry) -> bool:
    """Injective and distance preserving on its domain"""
    pairs = list(iso.mapping)
    if len({j for _, j in pairs}) != len(pairs):
        return False
    for i, j in pairs:
        for i2, j2 in pairs:
            if iso.source.d[i][i2] != iso.target.d[j][j2]:
                return False
    return True


def _consistent(
    a: FiniteMetricSpace,
    b: FiniteMetricSpace,
    forward: Dict[int, int],
    src: int,
    dst: int,
) -> bool:
    row_a = a.d[src]
    row_b = b.d[dst]
    for i, j in forward.items():
        if row_a[i] != row_b[j]:
            return False
    return True


def isometric_embeddings(
    a: FiniteMetricSpace, b: FiniteMetricSpace
) -> List[PartialIsometry]:
    """All distance-preserving injections a -> b, lexicographic in the image array"""
    results: List[PartialIsometry] = []
    forward: Dict[int, int] = {}
    used = [False] * b.n

    def extend(i: int) -> None:
        if i == a.n:
            results.append(make_isometry(a, b, forward))
            return
        for j in range(b.n):
            if used[j] or not _consistent(a, b, forward, i, j):
                continue
            forward[i] = j
            used[j] = True
            extend(i + 1)
            used[j] = False
            del forward[i]

    if a.n <= b.n:
        extend(0)
    logger.debug(f"Found {len(results)} embeddings of a {a.n}-point space")
    return results


def isometry_group(space: FiniteMetricSpace) -> List[PartialIsometry]:
    return isometric_embeddings(space, space)


def _distance_profile(space: FiniteMetricSpace) -> List[Fraction]:
    return sorted(space.d[i][j] for i in space.points() for j in space.points())


def back_and_forth(
    a: FiniteMetricSpace, b: FiniteMetricSpace
) -> Optional[PartialIsometry]:
    """
    Search for an isometry a -> b by the back-and-forth method.

    Steps alternate: extend the partial isometry to the lowest-index unmatched
    point of `a` (forth), then to the lowest-index unmatched point of `b`
    (back), trying candidates in ascending order and backtracking on failure.
    Returns None when no isometry exists.
    """
    if a.n != b.n:
        return None
    if _distance_profile(a) != _distance_profile(b):
        return None

    forward: Dict[int, int] = {}
    backward: Dict[int, int] = {}

    def search(forth: bool) -> bool:
        if len(forward) == a.n:
            return True
        if forth:
            src = min(i for i in a.points() if i not in forward)
            for dst in b.points():
                if dst in backward or not _consistent(a, b, forward, src, dst):
                    continue
                forward[src] = dst
                backward[dst] = src
                if search(False):
                    return True
                del forward[src]
                del backward[dst]
            return False
        dst = min(j for j in b.points() if j not in backward)
        for src in a.points():
            if src in forward or not _consistent(b, a, backward, dst, src):
                continue
            forward[src] = dst
            backward[dst] = src
            if search(True):
                return True
            del forward[src]
            del backward[dst]
        return False

    if search(True):
        return make_isometry(a, b, forward)
    return None


def brute_force_isometry(
    a: FiniteMetricSpace, b: FiniteMetricSpace
) -> Optional[PartialIsometry]:
    """Exhaustive permutation search, first isometry in lexicographic order"""
    if a.n != b.n:
        return None
    for perm in permutations(range(b.n)):
        if all(
            a.d[i][j] == b.d[perm[i]][perm[j]] for i in a.points() for j in a.points()
        ):
            return make_isometry(a, b, dict(enumerate(perm)))
    return None


def random_metric(
    n: int,
    denom_bound: int,
    cap: Optional[Fraction] = None,
    seed: int = 0,
) -> FiniteMetricSpace:
    """
    Sample a metric on n points one point at a time.

    Distances from the new point m to the earlier points i are drawn in index
    order, uniformly from the grid {k/denom_bound} inside [L, U] with
    L = max(1/denom_bound, max_{j<i} |d(m,j) - d(i,j)|) and
    U = min(cap, min_{j<i} d(m,j) + d(i,j)). Without a cap every distance
    lies in (0, 1].
    """
    if n < 1:
        raise DomainError("A metric space needs at least one point")
    if denom_bound < 1:
        raise DomainError("denom_bound must be positive")
    if cap is not None and Fraction(cap) <= 0:
        raise DomainError("cap must be positive")

    rng = random.Random(seed)
    step = Fraction(1, denom_bound)
    upper_default = Fraction(cap) if cap is not None else Fraction(1)
    d = [[Fraction(0)] * n for _ in range(n)]

    for m in range(1, n):
        for i in range(m):
            low = step
            high = upper_default
            for j in range(i):
                low = max(low, abs(d[m][j] - d[i][j]))
                high = min(high, d[m][j] + d[i][j])
            if cap is not None:
                high = min(high, Fraction(cap))
            k_low = -((-low) // step)
            k_high = high // step
            if k_low > k_high:
                raise GenerationError(
                    f"Empty grid interval for pair ({m}, {i})",
                    details={"pair": [m, i], "low": str(low), "high": str(high)},
                )
            value = rng.randint(k_low, k_high) * step
            d[m][i] = value
            d[i][m] = value

    return FiniteMetricSpace(d=freeze_matrix(d))
