"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: syndetic_service.py                                                   │
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
from functools import lru_cache
from itertools import combinations, product
from math import lcm
from typing import Iterable, List, Optional, Sequence, Set, Union
import logging
import random

import numpy as np
import sympy

from src.config.settings import settings
from src.core.exceptions import DomainError, PreconditionError
from src.models.models import BohrSpec, FiniteGroup, IntegerWindowSet
from src.schemas.syndetic import (
    CharacterReport,
    GapReport,
    PestovWitness,
    SumsetReport,
    TripleSumBohrReport,
)
from src.utils.groups import element_orders, validate_group_table

logger = logging.getLogger(__name__)


def window_set(window: int, members: Iterable[int]) -> IntegerWindowSet:
    if window < 0:
        raise DomainError("window must be nonnegative")
    values = sorted(set(int(m) for m in members))
    outside = [m for m in values if not -window <= m <= window]
    if outside:
        raise DomainError(
            f"Members outside [-{window}, {window}]", details={"outside": outside[:10]}
        )
    return IntegerWindowSet(window=window, members=tuple(values))


def _indicator(s: IntegerWindowSet) -> np.ndarray:
    indicator = np.zeros(2 * s.window + 1, dtype=bool)
    if s.members:
        indicator[np.asarray(s.members, dtype=np.int64) + s.window] = True
    return indicator


def is_syndetic(s: IntegerWindowSet) -> GapReport:
    """
    Largest gap between consecutive members. Sets with fewer than two members
    are reported non-syndetic. The growing-gap flag is raised when the gaps
    in the upper half of the set exceed every gap in the lower half.
    """
    if len(s.members) < 2:
        return GapReport(
            members=len(s.members),
            syndetic=False,
            verdict="not syndetic: fewer than two members",
        )
    gaps = np.diff(np.asarray(s.members, dtype=np.int64))
    max_gap = int(gaps.max())
    half = len(gaps) // 2
    growing = half > 0 and int(gaps[half:].max()) > int(gaps[:half].max())
    return GapReport(
        members=len(s.members),
        max_gap=max_gap,
        syndetic=True,
        growing_gap=bool(growing),
        verdict=f"syndetic within window at bound {max_gap}",
    )


def difference_set(s: IntegerWindowSet) -> SumsetReport:
    """S - S inside the window; exact on [-N/2, N/2]"""
    n = s.window
    indicator = _indicator(s)
    # offset 2N: index k + 2N holds the difference k
    differences = np.zeros(4 * n + 1, dtype=bool)
    for b in s.members:
        start = n - b
        differences[start : start + 2 * n + 1] |= indicator
    inside = differences[n : 3 * n + 1]
    members = (np.nonzero(inside)[0] - n).tolist()
    return SumsetReport(window=n, reliable=n // 2, members=members)


def triple_sum(s: IntegerWindowSet) -> SumsetReport:
    """S - S + S inside the window; exact on [-N/3, N/3]"""
    n = s.window
    indicator = _indicator(s)
    differences = np.zeros(4 * n + 1, dtype=bool)
    for b in s.members:
        start = n - b
        differences[start : start + 2 * n + 1] |= indicator
    # offset 3N: index k + 3N holds the sum k
    sums = np.zeros(6 * n + 1, dtype=bool)
    for a in s.members:
        start = a + n
        sums[start : start + 4 * n + 1] |= differences
    inside = sums[2 * n : 4 * n + 1]
    members = (np.nonzero(inside)[0] - n).tolist()
    return SumsetReport(window=n, reliable=n // 3, members=members)


@lru_cache(maxsize=None)
def _close_to_one(k: int, q: int, threshold: Fraction) -> bool:
    """cos(2 pi k / q) > threshold, decided exactly"""
    c = sympy.cos(2 * sympy.pi * sympy.Rational(k, q))
    t = sympy.Rational(threshold.numerator, threshold.denominator)
    if c.is_Rational:
        return bool(c > t)
    positive = (c - t).is_positive
    if positive is None:
        # irrational c never equals the rational threshold
        positive = bool((c - t).evalf(60) > 0)
    return bool(positive)


def _validate_spec(spec: BohrSpec) -> None:
    if spec.epsilon <= 0:
        raise DomainError("epsilon must be positive")
    for theta in spec.frequencies:
        if not 0 <= theta < 1:
            raise DomainError(
                f"Frequency {theta} is outside [0, 1)", details={"theta": str(theta)}
            )


def bohr_residues(spec: BohrSpec) -> List[bool]:
    """Membership of each residue modulo the common period of the characters"""
    _validate_spec(spec)
    period = 1
    for theta in spec.frequencies:
        period = lcm(period, Fraction(theta).denominator)
    # |e(theta n) - 1| < eps  iff  cos(2 pi theta n) > 1 - eps^2 / 2
    threshold = 1 - Fraction(spec.epsilon) ** 2 / 2
    table = []
    for r in range(period):
        table.append(
            all(
                _close_to_one(
                    (theta.numerator * r) % theta.denominator,
                    theta.denominator,
                    threshold,
                )
                for theta in map(Fraction, spec.frequencies)
            )
        )
    return table


def bohr_members(spec: BohrSpec, window: int) -> IntegerWindowSet:
    """
    {n in [-N, N] : |exp(2 pi i theta n) - 1| < eps for every theta}.
    Strict inequality; eps > 2 gives the whole window.
    """
    _validate_spec(spec)
    if window < 0:
        raise DomainError("window must be nonnegative")
    values = np.arange(-window, window + 1, dtype=np.int64)
    if spec.epsilon > 2 or not spec.frequencies:
        return IntegerWindowSet(window=window, members=tuple(values.tolist()))
    table = np.asarray(bohr_residues(spec), dtype=bool)
    mask = table[np.mod(values, len(table))]
    return IntegerWindowSet(window=window, members=tuple(values[mask].tolist()))


def check_triple_sum_bohr(
    s: IntegerWindowSet, spec: BohrSpec
) -> TripleSumBohrReport:
    """
    Finite-window evidence that S - S + S contains the Bohr neighbourhood of
    zero given by `spec`. Points of the Bohr set on the reliable sub-window
    missing from S - S + S are violations; points missing from S - S are
    listed separately and never judged.
    """
    gaps = is_syndetic(s)
    if not gaps.syndetic:
        raise PreconditionError(
            "check_triple_sum_bohr needs a syndetic set",
            details={"verdict": gaps.verdict},
        )
    triple = triple_sum(s)
    difference = difference_set(s)
    bohr_triple = bohr_members(spec, triple.reliable)
    bohr_difference = bohr_members(spec, difference.reliable)
    triple_members = set(triple.members)
    difference_members = set(difference.members)
    violations = [n for n in bohr_triple.members if n not in triple_members]
    difference_violations = [
        n for n in bohr_difference.members if n not in difference_members
    ]
    if violations:
        logger.info(f"Triple sum misses {len(violations)} Bohr points")
    return TripleSumBohrReport(
        holds=not violations,
        reliable_triple=triple.reliable,
        reliable_difference=difference.reliable,
        bohr_members=len(bohr_triple.members),
        violations=violations,
        difference_violations=difference_violations,
    )


def random_syndetic(window: int, max_gap: int, seed: int = 0) -> IntegerWindowSet:
    """Random set in [-N, N] whose consecutive gaps are drawn from 1..max_gap"""
    if max_gap < 1:
        raise DomainError("max_gap must be positive")
    rng = random.Random(seed)
    members = []
    x = -window + rng.randrange(max_gap)
    while x <= window:
        members.append(x)
        x += rng.randint(1, max_gap)
    return IntegerWindowSet(window=window, members=tuple(members))


def _as_group(group: Union[FiniteGroup, Sequence[Sequence[int]]]) -> FiniteGroup:
    if isinstance(group, FiniteGroup):
        return group
    return validate_group_table(group)


def _product_set(
    group: FiniteGroup, left: Iterable[int], right: Iterable[int]
) -> Set[int]:
    right = list(right)
    return {group.mul(a, b) for a in left for b in right}


def left_syndetic_witness(
    group: Union[FiniteGroup, Sequence[Sequence[int]]], subset: Sequence[int]
) -> Optional[List[int]]:
    """
    A smallest F with FS = G (lexicographically first among the smallest)
    for groups up to MAX_EXHAUSTIVE_ORDER, a greedy cover otherwise.
    None when S is empty.
    """
    g = _as_group(group)
    members = sorted(set(subset))
    if not members:
        return None
    everything = set(range(g.order))
    if g.order <= settings.MAX_EXHAUSTIVE_ORDER:
        for size in range(1, g.order + 1):
            for f in combinations(range(g.order), size):
                if _product_set(g, f, members) == everything:
                    return list(f)
        return None
    chosen: List[int] = []
    covered: Set[int] = set()
    while covered != everything:
        best = max(
            range(g.order),
            key=lambda a: len(_product_set(g, [a], members) - covered),
        )
        chosen.append(best)
        covered |= _product_set(g, [best], members)
    return sorted(chosen)


def pestov_witness(
    group: Union[FiniteGroup, Sequence[Sequence[int]]]
) -> PestovWitness:
    """
    A left-syndetic S with SS^-1 != G, or "extremely amenable".

    A finite discrete group is dense in itself only as a whole, so any such S
    certifies that G is not extremely amenable. Groups up to
    MAX_EXHAUSTIVE_ORDER are searched over subsets by size (identity first);
    larger ones use S = {e}, F = G.
    """
    g = _as_group(group)
    everything = set(range(g.order))
    inverse = {a: g.inverse(a) for a in range(g.order)}

    def ss_inverse(s: Sequence[int]) -> Set[int]:
        return {g.mul(a, inverse[b]) for a in s for b in s}

    if g.order == 1:
        return PestovWitness(
            group=g.name,
            order=1,
            extremely_amenable=True,
            S=[g.identity],
            F=[g.identity],
            SS_inverse=[g.identity],
            bound="exhaustive",
        )

    if g.order > settings.MAX_EXHAUSTIVE_ORDER:
        s = [g.identity]
        return PestovWitness(
            group=g.name,
            order=g.order,
            extremely_amenable=False,
            S=s,
            F=list(range(g.order)),
            SS_inverse=sorted(ss_inverse(s)),
            bound="S = {e}",
        )

    candidates = [g.identity] + [a for a in range(g.order) if a != g.identity]
    for size in range(1, g.order + 1):
        for s in combinations(candidates, size):
            differences = ss_inverse(s)
            if differences == everything:
                continue
            f = left_syndetic_witness(g, s)
            if f is None:
                continue
            return PestovWitness(
                group=g.name,
                order=g.order,
                extremely_amenable=False,
                S=sorted(s),
                F=f,
                SS_inverse=sorted(differences),
                bound="exhaustive",
            )
    return PestovWitness(
        group=g.name, order=g.order, extremely_amenable=True, bound="exhaustive"
    )


def _generating_set(g: FiniteGroup) -> List[int]:
    generators: List[int] = []
    subgroup = {g.identity}
    for a in range(g.order):
        if a in subgroup:
            continue
        generators.append(a)
        frontier = list(subgroup)
        while frontier:
            x = frontier.pop()
            for b in generators:
                y = g.mul(x, b)
                if y not in subgroup:
                    subgroup.add(y)
                    frontier.append(y)
    return generators


def nontrivial_character(
    group: Union[FiniteGroup, Sequence[Sequence[int]]]
) -> Optional[CharacterReport]:
    """
    A nonzero homomorphism G -> Z/m (m the exponent of G), that is a
    character with values in the m-th roots of unity. None when G has no
    nontrivial abelian quotient, in particular for the trivial group.
    """
    g = _as_group(group)
    generators = _generating_set(g)
    modulus = 1
    for order in element_orders(g).values():
        modulus = lcm(modulus, order)

    for values in product(range(modulus), repeat=len(generators)):
        if not any(values):
            continue
        chi = {g.identity: 0}
        frontier = [g.identity]
        consistent = True
        while frontier and consistent:
            x = frontier.pop()
            for b, v in zip(generators, values):
                y = g.mul(x, b)
                value = (chi[x] + v) % modulus
                if y not in chi:
                    chi[y] = value
                    frontier.append(y)
                elif chi[y] != value:
                    consistent = False
                    break
        if not consistent or len(chi) != g.order:
            continue
        if all(
            chi[g.mul(a, b)] == (chi[a] + chi[b]) % modulus
            for a in range(g.order)
            for b in range(g.order)
        ):
            return CharacterReport(modulus=modulus, values=chi)
    return None
