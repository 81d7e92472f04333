"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: models.py                                                             │
│ Developed by: Davidson Gomes                                                 │
│ Creation date: May 13, 2025                                                  │
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

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

Matrix = Tuple[Tuple[Fraction, ...], ...]


def freeze_matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FiniteMetricSpace:
    """Exact-rational distance matrix. Point identity is the row index."""

    d: Matrix
    labels: Optional[Tuple[str, ...]] = None
    pseudometric: bool = False

    @property
    def n(self) -> int:
        return len(self.d)

    def points(self) -> range:
        return range(len(self.d))

    def dist(self, i: int, j: int) -> Fraction:
        return self.d[i][j]

    def same_metric(self, other: "FiniteMetricSpace") -> bool:
        return self.d == other.d


@dataclass(frozen=True)
class PartialIsometry:
    """Partial injective map, stored as (source, target) pairs sorted by source"""

    source: FiniteMetricSpace
    target: FiniteMetricSpace
    mapping: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.mapping)

    @property
    def is_total(self) -> bool:
        return len(self.mapping) == self.source.n

    @property
    def is_bijective(self) -> bool:
        return self.is_total and self.source.n == self.target.n

    def images(self) -> List[int]:
        """Image array of a total map"""
        lookup = self.as_dict()
        return [lookup[i] for i in self.source.points()]

    def __call__(self, i: int) -> int:
        return self.as_dict()[i]


@dataclass(frozen=True)
class KatetovFunction:
    """Value map on the points `support` of `base` (indices into base)"""

    base: FiniteMetricSpace
    support: Tuple[int, ...]
    values: Tuple[Fraction, ...]

    @property
    def is_full(self) -> bool:
        return self.support == tuple(self.base.points())

    def value(self, x: int) -> Fraction:
        return self.values[self.support.index(x)]

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(zip(self.support, self.values))


@dataclass(frozen=True)
class ExtensionStep:
    """One stage X -> X' of the tower; `adjoined` pairs each function with its point"""

    before: FiniteMetricSpace
    after: FiniteMetricSpace
    embedding: PartialIsometry
    adjoined: Tuple[Tuple[KatetovFunction, int], ...]
    merged: Tuple[Tuple[int, int], ...] = ()


@dataclass(frozen=True)
class BiKatetovMatrix:
    left: FiniteMetricSpace
    right: FiniteMetricSpace
    p: Matrix


@dataclass(frozen=True)
class AmalgamResult:
    space: FiniteMetricSpace
    left_embedding: PartialIsometry
    right_embedding: PartialIsometry


@dataclass(frozen=True)
class StaircaseRelation:
    n: int
    cells: FrozenSet[Tuple[int, int]]

    def sorted_cells(self) -> List[Tuple[int, int]]:
        return sorted(self.cells, key=lambda c: (c[0] + c[1], c[0]))


@dataclass(frozen=True)
class SelfMap:
    images: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def then(self, other: "SelfMap") -> "SelfMap":
        """Product s.t: apply self, then other"""
        return SelfMap(tuple(other.images[x] for x in self.images))

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def is_bijection(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def inverse(self) -> "SelfMap":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return SelfMap(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "SelfMap":
        return cls(tuple(range(n)))


@dataclass(frozen=True)
class TransformationSemigroup:
    """Elements in discovery order; table[i][j] indexes elements[i] then elements[j]"""

    n: int
    elements: Tuple[SelfMap, ...]
    table: Tuple[Tuple[int, ...], ...]
    index: Dict[SelfMap, int] = field(compare=False, hash=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]


@dataclass(frozen=True)
class FiniteAction:
    n: int
    generators: Tuple[SelfMap, ...]
    elements: Optional[Tuple[SelfMap, ...]] = None


@dataclass(frozen=True)
class MaximalChain:
    n: int
    chain: Tuple[FrozenSet[int], ...]

    def ordering(self) -> Tuple[int, ...]:
        """The order in which the chain adds points"""
        order = []
        previous: FrozenSet[int] = frozenset()
        for member in self.chain:
            (point,) = member - previous
            order.append(point)
            previous = member
        return tuple(order)


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by its multiplication table, table[a][b] = a*b"""

    table: Tuple[Tuple[int, ...], ...]
    identity: int
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        for b in range(len(self.table)):
            if self.table[a][b] == self.identity:
                return b
        raise ValueError(f"Element {a} has no inverse")


@dataclass(frozen=True)
class IntegerWindowSet:
    window: int
    members: Tuple[int, ...]
    lookup: FrozenSet[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "lookup", frozenset(self.members))

    def __contains__(self, value: int) -> bool:
        return value in self.lookup


@dataclass(frozen=True)
class BohrSpec:
    frequencies: Tuple[Fraction, ...]
    epsilon: Fraction
