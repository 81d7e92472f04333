"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: test_syndetic_service.py                                              │
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
from src.models.models import BohrSpec
from src.services.syndetic_service import (
    bohr_members,
    bohr_residues,
    check_triple_sum_bohr,
    difference_set,
    is_syndetic,
    left_syndetic_witness,
    nontrivial_character,
    pestov_witness,
    random_syndetic,
    triple_sum,
    window_set,
)
from src.utils.groups import cyclic_table, small_groups

HALF = Fraction(1, 2)


@pytest.fixture
def evens():
    return window_set(10, range(-10, 11, 2))


def test_evens_have_gap_two(evens):
    report = is_syndetic(evens)
    assert report.syndetic
    assert report.max_gap == 2
    assert not report.growing_gap


def test_squares_have_growing_gaps():
    report = is_syndetic(window_set(400, [k * k for k in range(21)]))
    assert report.max_gap == 39
    assert report.growing_gap


def test_tiny_sets_are_not_syndetic():
    assert not is_syndetic(window_set(5, [3])).syndetic
    assert is_syndetic(window_set(5, [])).max_gap is None


def test_window_set_checks_members():
    with pytest.raises(DomainError):
        window_set(3, [4])
    with pytest.raises(DomainError):
        window_set(-1, [])


def test_difference_and_triple_sums(evens):
    differences = difference_set(evens)
    assert differences.reliable == 5
    assert differences.members == list(range(-10, 11, 2))
    triples = triple_sum(window_set(9, [0, 3]))
    assert triples.reliable == 3
    assert triples.members == [-3, 0, 3, 6]


def test_bohr_set_of_one_half():
    spec = BohrSpec(frequencies=(HALF,), epsilon=Fraction(1))
    assert bohr_residues(spec) == [True, False]
    assert bohr_members(spec, 4).members == (-4, -2, 0, 2, 4)


def test_bohr_threshold_is_strict():
    antipode = BohrSpec(frequencies=(HALF,), epsilon=Fraction(2))
    assert bohr_members(antipode, 2).members == (-2, 0, 2)
    third = BohrSpec(frequencies=(Fraction(1, 3),), epsilon=Fraction(2))
    assert bohr_members(third, 2).members == (-2, -1, 0, 1, 2)


def test_bohr_irrational_cosines():
    # cos(2 pi / 8) = 0.7071... lies above 1 - (4/5)^2 / 2 = 0.68
    spec = BohrSpec(frequencies=(Fraction(1, 8),), epsilon=Fraction(4, 5))
    assert bohr_residues(spec) == [True, True, False, False, False, False, False, True]


def test_bohr_shortcuts_and_errors():
    wide = BohrSpec(frequencies=(Fraction(1, 5),), epsilon=Fraction(3))
    assert len(bohr_members(wide, 3).members) == 7
    assert len(bohr_members(BohrSpec((), HALF), 3).members) == 7
    with pytest.raises(DomainError):
        bohr_members(BohrSpec((Fraction(1),), HALF), 3)
    with pytest.raises(DomainError):
        bohr_members(BohrSpec((HALF,), Fraction(0)), 3)


def test_triple_sum_contains_bohr_set(evens):
    spec = BohrSpec(frequencies=(HALF,), epsilon=Fraction(1))
    report = check_triple_sum_bohr(evens, spec)
    assert report.holds
    assert report.violations == []


def test_triple_sum_misses_reported():
    threes = window_set(30, range(-30, 31, 3))
    spec = BohrSpec(frequencies=(HALF,), epsilon=Fraction(1))
    report = check_triple_sum_bohr(threes, spec)
    assert not report.holds
    assert 2 in report.violations
    with pytest.raises(PreconditionError):
        check_triple_sum_bohr(window_set(30, [0]), spec)


def test_random_syndetic_respects_gap():
    s = random_syndetic(200, 5, seed=7)
    assert is_syndetic(s).max_gap <= 5
    assert s == random_syndetic(200, 5, seed=7)


def test_pestov_witness_for_c2():
    witness = pestov_witness(cyclic_table(2))
    assert not witness.extremely_amenable
    assert witness.S == [0]
    assert witness.F == [0, 1]
    assert witness.SS_inverse == [0]


def test_trivial_group_is_extremely_amenable():
    assert pestov_witness([[0]]).extremely_amenable
    assert nontrivial_character([[0]]) is None


def test_every_small_group_has_a_witness_and_character():
    for group in small_groups(12):
        witness = pestov_witness(group)
        everything = set(range(group.order))
        assert not witness.extremely_amenable
        assert set(witness.SS_inverse) != everything
        assert {group.mul(f, s) for f in witness.F for s in witness.S} == everything
        character = nontrivial_character(group)
        assert character is not None, group.name
        assert any(character.values.values())


def test_left_syndetic_witness():
    c4 = cyclic_table(4)
    assert left_syndetic_witness(c4, [0, 2]) == [0, 1]
    assert left_syndetic_witness(c4, []) is None
