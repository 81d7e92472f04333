"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_metric_service.py                                                │
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

import pytest

from src.core.exceptions import DomainError, GenerationError, ShapeError
from src.models.models import FiniteMetricSpace
from src.schemas.report import ViolationReport
from src.services.metric_service import (
    back_and_forth,
    brute_force_isometry,
    diameter,
    is_isometric_map,
    isometric_embeddings,
    isometry_group,
    line_space,
    random_metric,
    require_metric,
    restrict,
    uniform_space,
    validate_metric,
)


def test_two_point_metric_is_valid():
    space = validate_metric([[0, 1], [1, 0]])
    assert isinstance(space, FiniteMetricSpace)
    assert space.n == 2
    assert space.d[0][1] == 1


def test_rationals_are_read_exactly():
    space = validate_metric([["0", "1/3"], ["2/6", "0"]])
    assert space.d[1][0] == Fraction(1, 3)


def test_triangle_violation_names_the_triple():
    report = validate_metric([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
    assert isinstance(report, ViolationReport)
    assert report.kind == "triangle"
    assert report.indices == (0, 1, 2)


def test_diagonal_checked_first():
    report = validate_metric([[1, 2], [3, 0]])
    assert report.kind == "diagonal"
    assert report.indices == (0,)


def test_asymmetry():
    report = validate_metric([[0, 1], [2, 0]])
    assert report.kind == "symmetry"
    assert report.indices == (0, 1)


def test_zero_distance_needs_pseudometric():
    matrix = [[0, 0], [0, 0]]
    assert validate_metric(matrix).kind == "positivity"
    assert validate_metric(matrix, pseudometric=True).pseudometric


def test_shape_and_sign_errors():
    with pytest.raises(ShapeError):
        validate_metric([[0, 1]])
    with pytest.raises(ShapeError):
        validate_metric([])
    with pytest.raises(DomainError):
        validate_metric([[0, -1], [-1, 0]])


def test_require_metric_raises_on_violation():
    with pytest.raises(DomainError) as info:
        require_metric([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
    assert info.value.details["indices"] == [0, 1, 2]


def test_restrict_keeps_order_and_labels():
    space = validate_metric(
        [[0, 1, 3], [1, 0, 2], [3, 2, 0]], labels=["a", "b", "c"]
    )
    sub = restrict(space, [2, 0])
    assert sub.d == ((0, 3), (3, 0))
    assert sub.labels == ("a", "c")
    with pytest.raises(DomainError):
        restrict(space, [])
    with pytest.raises(DomainError):
        restrict(space, [3])


def test_embeddings_of_a_point_pair(triangle, two_points):
    assert len(isometry_group(triangle)) == 6
    assert len(isometric_embeddings(two_points, line_space([0, 1, 2]))) == 4
    assert isometric_embeddings(triangle, two_points) == []


def test_embeddings_are_isometric(line):
    for iso in isometric_embeddings(line, line):
        assert is_isometric_map(iso)
    assert len(isometry_group(line)) == 1


def test_back_and_forth_finds_reversal():
    a = line_space([0, 1, 3])
    b = line_space([0, 2, 3])
    iso = back_and_forth(a, b)
    assert iso is not None
    assert iso.images() == [2, 1, 0]
    assert is_isometric_map(iso)
    assert brute_force_isometry(a, b).images() == [2, 1, 0]


def test_back_and_forth_rejects_non_isometric(line):
    assert back_and_forth(line, line_space([0, 1, 2])) is None
    assert back_and_forth(line, uniform_space(2)) is None


def test_uniform_space_and_diameter(line):
    assert uniform_space(3, Fraction(1, 2)).d[0][2] == Fraction(1, 2)
    assert diameter(line) == 3


def test_random_metric_is_valid_and_seeded():
    space = random_metric(8, 6, seed=3)
    assert isinstance(validate_metric(space.d), FiniteMetricSpace)
    assert all(0 < space.d[i][j] <= 1 for i in range(8) for j in range(8) if i != j)
    assert all((6 * v).denominator == 1 for row in space.d for v in row)
    assert random_metric(8, 6, seed=3) == space


def test_random_metric_respects_cap():
    space = random_metric(6, 4, cap=Fraction(1, 2), seed=1)
    assert diameter(space) <= Fraction(1, 2)


def test_random_metric_arguments():
    with pytest.raises(DomainError):
        random_metric(0, 4)
    with pytest.raises(DomainError):
        random_metric(3, 0)
    with pytest.raises(DomainError):
        random_metric(3, 4, cap=Fraction(0))


def test_coarse_grid_below_minimum_step_fails():
    with pytest.raises(GenerationError):
        random_metric(3, 1, cap=Fraction(1, 2))
