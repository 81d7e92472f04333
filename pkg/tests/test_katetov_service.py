"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_katetov_service.py                                               │
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

from src.core.exceptions import DomainError, PreconditionError
from src.schemas.katetov import FullStrategy, SampledStrategy
from src.schemas.report import ViolationReport
from src.services.katetov_service import (
    adjoin,
    compose_embeddings,
    extend_isometry,
    extension_property_score,
    grid_katetov_functions,
    is_katetov,
    kappa_extend,
    kuratowski_embedding,
    make_function,
    one_point_extension,
    point_function,
    sup_distance,
    urysohn_approx,
)
from src.services.metric_service import (
    is_isometric_map,
    isometry_group,
    line_space,
    make_isometry,
    restrict,
    uniform_space,
    validate_metric,
)

HALF = Fraction(1, 2)


def test_point_functions_are_katetov(two_points):
    assert point_function(two_points, 0).values == (0, 1)
    assert is_katetov(two_points, [0, 1]) is True


def test_zero_function_violates_sum(two_points):
    report = is_katetov(two_points, [0, 0])
    assert isinstance(report, ViolationReport)
    assert report.kind == "sum"
    assert report.indices == (0, 1)


def test_lipschitz_violation(two_points):
    assert is_katetov(two_points, {0: 0, 1: 2}).kind == "lipschitz"


def test_value_map_errors(two_points):
    with pytest.raises(DomainError):
        is_katetov(two_points, [1])
    with pytest.raises(DomainError):
        is_katetov(two_points, {0: 1})
    with pytest.raises(DomainError):
        is_katetov(two_points, [1, -1])


def test_make_function_sorts_support(line):
    f = make_function(line, [2, 0], [2, 1])
    assert f.support == (0, 2)
    assert f.values == (1, 2)
    with pytest.raises(PreconditionError):
        make_function(line, [0, 2], [1, 1])


def test_kuratowski_embedding_is_isometric(line):
    h = kuratowski_embedding(line)
    for x in line.points():
        for y in line.points():
            assert sup_distance(h[x], h[y]) == line.d[x][y]


def test_kappa_extend_on_the_line(line):
    g = kappa_extend(line, [0, 2], [1, 2])
    assert g.values == (1, 2, 2)
    assert is_katetov(line, g.values) is True


def test_kappa_extend_rejects_non_katetov(line):
    with pytest.raises(PreconditionError):
        kappa_extend(line, [0, 2], [1, 1])
    with pytest.raises(DomainError):
        kappa_extend(line, [], [])


def test_kappa_extend_is_nonexpansive(line):
    f = kappa_extend(line, [0, 1], {0: 2, 1: 2})
    g = kappa_extend(line, [0, 1], {0: 1, 1: 2})
    assert sup_distance(f, g) <= 1


def test_adjoin_places_point_at_requested_distances(two_points):
    f = make_function(two_points, [0, 1], [2, 3])
    step = adjoin(two_points, [f])
    assert step.after.n == 3
    assert step.after.d[2][0] == 2
    assert step.after.d[2][1] == 3
    assert is_isometric_map(step.embedding)


def test_adjoin_merges_point_functions_and_duplicates(two_points):
    h0 = point_function(two_points, 0)
    f = make_function(two_points, [0, 1], [1, 1])
    step = adjoin(two_points, [h0, f, f])
    assert step.after.n == 3
    assert step.merged == ((0, 0), (2, 2))
    assert [p for _, p in step.adjoined] == [0, 2, 2]


def test_adjoin_labels_new_points():
    space = validate_metric([[0, 1], [1, 0]], labels=["a", "b"])
    step = adjoin(space, [make_function(space, [0, 1], [1, 1])])
    assert step.after.labels == ("a", "b", "p2")


def test_adjoin_needs_full_functions(line):
    partial = make_function(line, [0], [1])
    with pytest.raises(DomainError):
        adjoin(line, [partial])


def test_one_point_extension_realizes_k(line):
    k_space = line_space([0, 1, 2])
    l_space = restrict(k_space, [0, 1])
    phi = make_isometry(l_space, line, {0: 0, 1: 1})
    step, embedding = one_point_extension(line, k_space, [0, 1], phi)
    assert is_isometric_map(embedding)
    assert embedding.images()[:2] == [0, 1]
    assert step.after.d[embedding(2)][0] == 2


def test_one_point_extension_checks_arguments(line):
    k_space = line_space([0, 1, 2])
    phi = make_isometry(restrict(k_space, [0]), line, {0: 0})
    with pytest.raises(DomainError):
        one_point_extension(line, k_space, [0], phi)


def test_grid_functions_on_one_point():
    point = uniform_space(1)
    assert grid_katetov_functions(point, [0], HALF, Fraction(1)) == [
        (0,),
        (HALF,),
        (1,),
    ]


def test_full_step_on_one_point():
    strategy = FullStrategy(delta=HALF, cap=1, max_subset=1)
    steps = urysohn_approx(uniform_space(1), 1, strategy)
    assert len(steps) == 1
    assert steps[0].after.n == 3
    assert sorted(steps[0].after.d[0]) == [0, HALF, 1]


def test_tower_embedding_is_isometric(triangle):
    strategy = SampledStrategy(delta=HALF, cap=1, max_subset=2, count=5, seed=4)
    steps = urysohn_approx(triangle, 2, strategy)
    assert len(steps) == 2
    assert is_isometric_map(compose_embeddings(steps))
    assert urysohn_approx(triangle, 2, strategy)[-1].after == steps[-1].after


def test_zero_iterations(triangle):
    strategy = FullStrategy(delta=HALF, cap=1, max_subset=1)
    assert urysohn_approx(triangle, 0, strategy) == []
    with pytest.raises(DomainError):
        urysohn_approx(triangle, -1, strategy)


def test_extension_score_on_one_point():
    score, realized, total = extension_property_score(
        uniform_space(1), 1, HALF, Fraction(1)
    )
    assert (score, realized, total) == (Fraction(1, 3), 1, 3)


def test_full_step_raises_score_over_old_points():
    strategy = FullStrategy(delta=HALF, cap=1, max_subset=1)
    step = urysohn_approx(uniform_space(1), 1, strategy)[0]
    score, _, _ = extension_property_score(step.after, 1, HALF, Fraction(1), over=[0])
    assert score == 1


def test_isometries_extend_through_a_full_step(triangle):
    strategy = FullStrategy(delta=HALF, cap=1, max_subset=2)
    step = urysohn_approx(triangle, 1, strategy)[0]
    for g in isometry_group(triangle):
        extended = extend_isometry(step, g)
        assert extended.is_bijective
        assert is_isometric_map(extended)
        assert [extended(x) for x in triangle.points()] == g.images()
