"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_suites.py                                                        │
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

from src.core.exceptions import UsageError
from src.models.models import SelfMap
from src.services.flows_service import generate_semigroup, minimal_left_ideals
from src.services.katetov_service import extension_property_score
from src.services.metric_service import line_space, uniform_space
from src.suites.base import Budget, PropertyTally
from src.suites.flows_suite import _ideals_by_characterization
from src.suites.katetov_suite import _count_requests
from src.suites.metric_suite import (
    _axioms_hold,
    _check_axiom_grid,
    _check_subspaces,
    _count_self_isometries,
)
from src.suites.runner import resolve_suites, run_suites, suite_order


def test_resolve_uses_canonical_order():
    assert resolve_suites(["syndetic", "metric"]) == ["metric", "syndetic"]
    assert resolve_suites(["all"]) == suite_order
    assert resolve_suites([]) == suite_order


def test_resolve_rejects_unknown_suites():
    with pytest.raises(UsageError) as info:
        resolve_suites(["metric", "bogus"])
    assert "all" in info.value.details["available"]


def test_tally_keeps_first_failure():
    tally = PropertyTally(suite="demo", bound="3 cases")
    tally.check("holds", True, case=0)
    tally.check("holds", False, case=1)
    tally.check("holds", False, case=2)
    tally.check("other", True)
    (holds, other) = tally.certificates()
    assert holds.property == "demo.holds"
    assert holds.verdict == "fail"
    assert holds.witness == {"checked": 3, "failed": 2, "first_failure": {"case": 1}}
    assert other.passed
    assert other.bound == "3 cases"


def test_budget():
    assert not Budget(None).exhausted()
    assert not Budget(3600).exhausted()
    assert Budget(-1).exhausted()


def test_exhausted_budget_fails_the_run():
    report = run_suites(["metric", "flows"], seed=0, budget=-1)
    assert report.exit_code == 1
    assert report.command == "suite metric flows"
    assert report.result == {"suites": ["metric", "flows"], "seed": 0}
    names = [c.property for c in report.certificates]
    assert names == ["flows.budget", "metric.budget"]
    assert all(c.witness["completed"] == 0 for c in report.certificates)


def test_tally_records_interruption():
    tally = PropertyTally(suite="demo", bound="")
    assert tally.out_of_budget(Budget(-1), 4)
    assert not tally.out_of_budget(Budget(None), 5)
    (cert,) = tally.certificates()
    assert cert.property == "demo.budget"
    assert cert.witness == {"completed": 4}


def test_tally_annotations_join_the_witness():
    tally = PropertyTally(suite="demo", bound="")
    tally.check("holds", True)
    tally.annotate("holds", drawn=7, resampled=2)
    (cert,) = tally.certificates()
    assert cert.passed
    assert cert.witness == {"checked": 1, "failed": 0, "drawn": 7, "resampled": 2}


def test_axiom_oracle():
    assert _axioms_hold([[0, 1], [1, 0]])
    assert not _axioms_hold([[0, 0], [0, 0]])
    assert not _axioms_hold([[0, 1], [2, 0]])
    assert not _axioms_hold([[0, 1, 3], [1, 0, 1], [3, 1, 0]])


def test_validation_agrees_with_axioms_on_the_grid():
    tally = PropertyTally(suite="metric", bound="")
    _check_axiom_grid(tally)
    (cert,) = tally.certificates()
    assert cert.passed
    assert cert.witness["checked"] == 3 + 3**4 + 3**9


def test_every_subspace_is_a_metric(line):
    tally = PropertyTally(suite="metric", bound="")
    _check_subspaces(tally, 0, line)
    (cert,) = tally.certificates()
    assert cert.passed
    assert cert.witness["checked"] == 7


def test_brute_isometry_count():
    assert _count_self_isometries(uniform_space(3, 1)) == 6
    assert _count_self_isometries(line_space([0, 1, 2])) == 2
    assert _count_self_isometries(line_space([0, 1, 3])) == 1


def test_score_matches_independent_count(line):
    point = line_space([0])
    half, one = Fraction(1, 2), Fraction(1)
    assert _count_requests(point, 1, half, one, [0]) == (1, 3)
    assert extension_property_score(point, 1, half, one) == (Fraction(1, 3), 1, 3)
    _, realized, total = extension_property_score(line, 2, half, one)
    assert (realized, total) == _count_requests(line, 2, half, one, [0, 1, 2])


def test_minimal_ideals_by_characterization():
    big = generate_semigroup([SelfMap((1, 2, 0)), SelfMap((0, 0, 2))])
    assert _ideals_by_characterization(big) == minimal_left_ideals(big)
    constants = generate_semigroup([SelfMap((0, 0)), SelfMap((1, 1))])
    assert _ideals_by_characterization(constants) == [[0], [1]]
