"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: groups.py                                                             │
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

from itertools import product
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics import (
    AbelianGroup,
    AlternatingGroup,
    DihedralGroup,
    PermutationGroup,
    SymmetricGroup,
)

from src.core.exceptions import DomainError
from src.models.models import FiniteAction, FiniteGroup, SelfMap


def validate_group_table(
    table: Sequence[Sequence[int]], name: str = ""
) -> FiniteGroup:
    """Check closure, identity, inverses and associativity of a Cayley table"""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise DomainError("Group table must be square and nonempty")
    if any(not 0 <= v < n for row in table for v in row):
        raise DomainError("Group table has entries out of range")
    identity = next(
        (
            e
            for e in range(n)
            if all(table[e][a] == a and table[a][e] == a for a in range(n))
        ),
        None,
    )
    if identity is None:
        raise DomainError("Group table has no identity")
    for a in range(n):
        if not any(table[a][b] == identity for b in range(n)):
            raise DomainError(f"Element {a} has no inverse", details={"element": a})
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise DomainError(
                "Group table is not associative", details={"triple": [a, b, c]}
            )
    return FiniteGroup(
        table=tuple(tuple(row) for row in table), identity=identity, name=name
    )


def table_from_permutation_group(
    group: PermutationGroup, name: str = ""
) -> FiniteGroup:
    """Cayley table of a sympy permutation group, elements sorted by array form"""
    elements = sorted(group.generate(), key=lambda p: p.array_form)
    position = {tuple(p.array_form): i for i, p in enumerate(elements)}
    table = tuple(
        tuple(position[tuple((a * b).array_form)] for b in elements) for a in elements
    )
    identity = position[tuple(range(group.degree))]
    return FiniteGroup(table=table, identity=identity, name=name)


def action_from_permutation_group(group: PermutationGroup) -> FiniteAction:
    """The natural action of a sympy permutation group on {0, ..., degree-1}"""
    return FiniteAction(
        n=group.degree,
        generators=tuple(SelfMap(tuple(g.array_form)) for g in group.generators),
    )


def cyclic_table(n: int) -> FiniteGroup:
    return FiniteGroup(
        table=tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
        identity=0,
        name=f"C{n}",
    )


def dicyclic_table(m: int) -> FiniteGroup:
    """
    Dic_m of order 4m: elements a^k x^e (k mod 2m, e in {0,1}) with
    a^(2m) = 1, x^2 = a^m and x a = a^-1 x.
    """
    order = 2 * m
    elements = [(k, e) for e in (0, 1) for k in range(order)]
    position = {el: i for i, el in enumerate(elements)}

    def mul(left: Tuple[int, int], right: Tuple[int, int]) -> Tuple[int, int]:
        (k1, e1), (k2, e2) = left, right
        if e1 == 0:
            return ((k1 + k2) % order, e2)
        if e2 == 0:
            return ((k1 - k2) % order, 1)
        return ((k1 - k2 + m) % order, 0)

    table = tuple(
        tuple(position[mul(a, b)] for b in elements) for a in elements
    )
    name = "Q8" if m == 2 else f"Dic{m}"
    return FiniteGroup(table=table, identity=0, name=name)


def small_groups(max_order: int = 12) -> List[FiniteGroup]:
    """Every nontrivial group of order <= max_order (at most 12) up to isomorphism"""
    if max_order > 12:
        raise DomainError("The catalogue stops at order 12")
    perm = table_from_permutation_group
    builders = [
        (2, "C2", lambda: cyclic_table(2)),
        (3, "C3", lambda: cyclic_table(3)),
        (4, "C4", lambda: cyclic_table(4)),
        (4, "C2xC2", lambda: perm(AbelianGroup(2, 2))),
        (5, "C5", lambda: cyclic_table(5)),
        (6, "C6", lambda: cyclic_table(6)),
        (6, "S3", lambda: perm(SymmetricGroup(3))),
        (7, "C7", lambda: cyclic_table(7)),
        (8, "C8", lambda: cyclic_table(8)),
        (8, "C4xC2", lambda: perm(AbelianGroup(4, 2))),
        (8, "C2xC2xC2", lambda: perm(AbelianGroup(2, 2, 2))),
        (8, "D4", lambda: perm(DihedralGroup(4))),
        (8, "Q8", lambda: dicyclic_table(2)),
        (9, "C9", lambda: cyclic_table(9)),
        (9, "C3xC3", lambda: perm(AbelianGroup(3, 3))),
        (10, "C10", lambda: cyclic_table(10)),
        (10, "D5", lambda: perm(DihedralGroup(5))),
        (11, "C11", lambda: cyclic_table(11)),
        (12, "C12", lambda: cyclic_table(12)),
        (12, "C6xC2", lambda: perm(AbelianGroup(6, 2))),
        (12, "A4", lambda: perm(AlternatingGroup(4))),
        (12, "D6", lambda: perm(DihedralGroup(6))),
        (12, "Dic3", lambda: dicyclic_table(3)),
    ]
    groups = []
    for order, name, build in builders:
        if order > max_order:
            continue
        group = build()
        groups.append(
            FiniteGroup(table=group.table, identity=group.identity, name=name)
        )
    return groups


def element_orders(group: FiniteGroup) -> Dict[int, int]:
    orders = {}
    for a in range(group.order):
        power, k = a, 1
        while power != group.identity:
            power = group.mul(power, a)
            k += 1
        orders[a] = k
    return orders
