"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_roelcke_service.py                                               │
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

from src.core.exceptions import DomainError, ShapeError
from src.schemas.report import ViolationReport
from src.services.metric_service import (
    is_isometric_map,
    isometry_group,
    line_space,
    random_metric,
    uniform_space,
)
from src.services.roelcke_service import (
    amalgam,
    compose,
    diagonal_staircase,
    enumerate_grid_idempotents,
    graph_element,
    idempotent_from_subset,
    identity_element,
    is_idempotent,
    is_staircase,
    isometry_from_matrix,
    leq,
    random_bikatetov,
    relational_compose,
    require_bikatetov,
    staircase,
    staircase_compose,
    subset_from_idempotent,
    validate_bikatetov,
)

HALF = Fraction(1, 2)


@pytest.fixture
def pair():
    return uniform_space(2, 1)


def test_identity_is_valid_and_a_unit(pair):
    e = identity_element(pair)
    assert validate_bikatetov(pair, pair, e.p) == e
    m = require_bikatetov(pair, pair, [[HALF, HALF], [HALF, HALF]])
    assert compose(e, m).p == m.p
    assert compose(m, e).p == m.p


def test_swap_graph(pair):
    swap = next(g for g in isometry_group(pair) if g.images() == [1, 0])
    m = graph_element(pair, swap)
    assert m.p == ((1, 0), (0, 1))
    assert isometry_from_matrix(m).images() == [1, 0]
    assert isometry_from_matrix(compose(m, m)).images() == [0, 1]


def test_subset_idempotent(pair):
    e = idempotent_from_subset(pair, [0])
    assert e.p == ((0, 1), (1, 1))
    assert is_idempotent(e)
    assert subset_from_idempotent(e) == [0]
    assert isometry_from_matrix(e) is None


def test_half_matrix_squares_to_one(pair):
    m = require_bikatetov(pair, pair, [["1/2", "1/2"], ["1/2", "1/2"]])
    assert compose(m, m).p == ((1, 1), (1, 1))
    assert not is_idempotent(m)


def test_violations(pair):
    report = validate_bikatetov(pair, pair, [[0, 0], [1, 1]])
    assert isinstance(report, ViolationReport)
    assert report.kind == "row_sum"
    assert report.indices == (0, 0, 1)
    with pytest.raises(DomainError):
        require_bikatetov(pair, pair, [[0, 0], [1, 1]])


def test_shape_range_and_diameter(pair):
    with pytest.raises(ShapeError):
        validate_bikatetov(pair, pair, [[0, 1]])
    with pytest.raises(DomainError):
        validate_bikatetov(pair, pair, [[0, 2], [2, 0]])
    with pytest.raises(DomainError):
        identity_element(line_space([0, 2]))


def test_compose_needs_matching_middle(pair, triangle):
    with pytest.raises(DomainError):
        compose(identity_element(pair), identity_element(triangle))


def test_amalgam_identifies_zero_distance_points(pair):
    result = amalgam(identity_element(pair))
    assert result.space.n == 2
    assert result.right_embedding.images() == [0, 1]
    glued = amalgam(require_bikatetov(pair, pair, [[1, 1], [1, 1]]))
    assert glued.space.n == 4
    assert is_isometric_map(glued.right_embedding)


def test_random_matrices_compose_and_associate():
    spaces = [random_metric(3, 4, seed=s) for s in range(4)]
    p = random_bikatetov(spaces[0], spaces[1], seed=1)
    q = random_bikatetov(spaces[1], spaces[2], seed=2)
    r = random_bikatetov(spaces[2], spaces[3], seed=3)
    assert not isinstance(validate_bikatetov(p.left, p.right, p.p), ViolationReport)
    pq = compose(p, q)
    assert not isinstance(
        validate_bikatetov(pq.left, pq.right, pq.p), ViolationReport
    )
    assert compose(pq, r).p == compose(p, compose(q, r)).p


def test_leq_and_monotone_composition(pair):
    e = identity_element(pair)
    ones = require_bikatetov(pair, pair, [[1, 1], [1, 1]])
    assert leq(e, ones)
    assert not leq(ones, e)
    assert leq(compose(e, e), compose(ones, ones))


def test_grid_idempotents_on_one_point():
    found = enumerate_grid_idempotents(uniform_space(1), HALF)
    assert [(m.p, subset) for m, subset in found] == [
        (((0,),), [0]),
        (((1,),), None),
    ]


def test_diagonal_staircase_is_a_unit():
    unit = diagonal_staircase(2)
    assert is_staircase(unit)
    upper = staircase(2, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)])
    assert staircase_compose(unit, upper) == upper
    assert staircase_compose(upper, unit) == upper


def test_staircase_composite_stays_inside_the_relation():
    lower = diagonal_staircase(1)
    upper = staircase(1, [(0, 0), (0, 1), (1, 1)])
    raw = relational_compose(lower, upper)
    assert raw == {(0, 0), (0, 1), (1, 0), (1, 1)}
    # the full block is the only cell set containing raw, and it is no staircase
    assert not is_staircase(staircase(1, sorted(raw)))
    result = staircase_compose(lower, upper)
    assert result == upper
    assert result.cells <= raw


def test_staircase_shape_checks():
    assert is_staircase(staircase(0, [(0, 0)]))
    assert not is_staircase(staircase(1, [(0, 0), (1, 1)]))
    assert not is_staircase(staircase(1, [(0, 0), (0, 1), (1, 0), (1, 1)]))
    with pytest.raises(DomainError):
        staircase_compose(staircase(1, [(0, 0), (1, 1)]), diagonal_staircase(1))
    with pytest.raises(DomainError):
        relational_compose(diagonal_staircase(1), diagonal_staircase(2))
