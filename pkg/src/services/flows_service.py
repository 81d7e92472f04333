"""
┌──────────────────────────────────────────────────────────────────────────────┐
│ @author: Davidson Gomes                                                      │
│ @file: flows_service.py                                                      │
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

from collections import deque
from itertools import permutations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union
import logging
import random

from src.core.exceptions import DomainError, GenerationError, PreconditionError
from src.models.models import (
    FiniteAction,
    FiniteGroup,
    MaximalChain,
    SelfMap,
    TransformationSemigroup,
)
from src.schemas.flows import (
    IdealStructureReport,
    LaminarChainReport,
    LinearOrdersReport,
)
from src.schemas.report import certificate

logger = logging.getLogger(__name__)

Map = Tuple[int, ...]


def _check_maps(maps: Sequence[SelfMap]) -> int:
    if not maps:
        raise DomainError("At least one generator is required")
    n = maps[0].n
    for index, m in enumerate(maps):
        if m.n != n:
            raise DomainError(
                "Generators act on sets of different sizes",
                details={"generator": index, "n": m.n, "expected": n},
            )
        if any(not 0 <= y < n for y in m.images):
            raise DomainError(
                f"Generator {index} has an image out of range",
                details={"generator": index},
            )
    return n


# Semigroups


def generate_semigroup(
    generators: Sequence[SelfMap], limit: Optional[int] = None
) -> TransformationSemigroup:
    """
    Breadth-first closure of the generators under s.t = "apply s, then t".

    Elements are kept in first-discovered order; the identity appears only
    when some product equals it. Raises GenerationError once the closure
    grows past `limit` elements.
    """
    n = _check_maps(generators)
    elements: List[SelfMap] = []
    index: Dict[SelfMap, int] = {}
    queue: deque = deque()
    for g in generators:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
            queue.append(g)
    while queue:
        s = queue.popleft()
        for g in generators:
            t = s.then(g)
            if t not in index:
                index[t] = len(elements)
                elements.append(t)
                queue.append(t)
                if limit is not None and len(elements) > limit:
                    raise GenerationError(
                        f"Semigroup exceeds {limit} elements",
                        details={"limit": limit},
                    )

    table = tuple(
        tuple(index[s.then(t)] for t in elements) for s in elements
    )
    logger.debug(f"Generated semigroup of size {len(elements)} on {n} points")
    return TransformationSemigroup(
        n=n, elements=tuple(elements), table=table, index=index
    )


def brute_force_closure(generators: Sequence[SelfMap]) -> Set[SelfMap]:
    """Fixpoint of pairwise products; an oracle for generate_semigroup"""
    _check_maps(generators)
    closed = set(generators)
    while True:
        new = {s.then(t) for s in closed for t in closed} - closed
        if not new:
            return closed
        closed |= new


def is_idempotent_map(s: SelfMap) -> bool:
    return s.then(s) == s


def idempotents(S: TransformationSemigroup) -> List[int]:
    return [i for i in range(len(S)) if S.mul(i, i) == i]


def power_idempotent(s: SelfMap) -> SelfMap:
    """The idempotent among the powers s, s^2, s^3, ..."""
    power = s
    while not is_idempotent_map(power):
        power = power.then(s)
    return power


def ellis_idempotent(S: TransformationSemigroup) -> int:
    """
    Idempotent found by shrinking a subsemigroup Y, starting from S.

    With a = min(Y): if Ya is smaller than Y, continue with Ya. Otherwise
    a lies in Ya, so Z = {x in Y : xa = a} is a nonempty subsemigroup; when
    Z = Y, a.a = a and a is returned, else continue with Z.
    """
    Y: FrozenSet[int] = frozenset(range(len(S)))
    while True:
        a = min(Y)
        Ya = frozenset(S.mul(y, a) for y in Y)
        if Ya != Y:
            Y = Ya
            continue
        Z = frozenset(x for x in Y if S.mul(x, a) == a)
        if Z == Y:
            return a
        Y = Z


def find_idempotent(
    s: Union[SelfMap, TransformationSemigroup], method: str = "power"
) -> SelfMap:
    """Idempotent of a single map (its powers) or of a semigroup"""
    if method not in ("power", "ellis"):
        raise DomainError(f"Unknown idempotent method {method!r}")
    if isinstance(s, SelfMap):
        if method == "power":
            return power_idempotent(s)
        S = generate_semigroup([s])
        return S.elements[ellis_idempotent(S)]
    if len(s) == 0:
        raise DomainError("Empty semigroup")
    if method == "power":
        return power_idempotent(s.elements[0])
    return s.elements[ellis_idempotent(s)]


def left_multiples(S: TransformationSemigroup, s: int) -> FrozenSet[int]:
    """S.s"""
    return frozenset(S.mul(t, s) for t in range(len(S)))


def principal_left_ideal(S: TransformationSemigroup, s: int) -> FrozenSet[int]:
    return left_multiples(S, s) | {s}


def is_left_ideal(S: TransformationSemigroup, subset: FrozenSet[int]) -> bool:
    return bool(subset) and all(
        S.mul(t, x) in subset for t in range(len(S)) for x in subset
    )


def minimal_left_ideals(S: TransformationSemigroup) -> List[List[int]]:
    """Inclusion-minimal principal left ideals, sorted"""
    principal = {principal_left_ideal(S, s) for s in range(len(S))}
    minimal = [
        ideal for ideal in principal if not any(other < ideal for other in principal)
    ]
    return sorted(sorted(ideal) for ideal in minimal)


def brute_force_minimal_left_ideals(S: TransformationSemigroup) -> List[List[int]]:
    """Minimal members among all subsets that are left ideals (|S| <= ~16)"""
    size = len(S)
    if size > 16:
        raise DomainError("Subset search is limited to 16 elements")
    ideals = []
    for mask in range(1, 1 << size):
        subset = frozenset(i for i in range(size) if mask >> i & 1)
        if is_left_ideal(S, subset):
            ideals.append(subset)
    minimal = [a for a in ideals if not any(b < a for b in ideals)]
    return sorted(sorted(a) for a in minimal)


def is_minimal_left_ideal(S: TransformationSemigroup, ideal: Sequence[int]) -> bool:
    members = frozenset(ideal)
    if not members or any(not 0 <= m < len(S) for m in members):
        return False
    return all(left_multiples(S, m) == members for m in members)


def equivariant_self_maps(
    S: TransformationSemigroup, ideal: Sequence[int]
) -> List[Dict[int, int]]:
    """
    Every f: M -> M with f(s.x) = s.f(x). M = S.x0 for any x0 in M, so f is
    fixed by the choice of f(x0); each choice is tried and checked.
    """
    members = sorted(ideal)
    x0 = members[0]
    results = []
    for y in members:
        f: Dict[int, int] = {}
        consistent = True
        for s in range(len(S)):
            x = S.mul(s, x0)
            image = S.mul(s, y)
            if f.setdefault(x, image) != image:
                consistent = False
                break
        if consistent and f.get(x0) == y and set(f) == set(members):
            results.append(f)
    return results


def right_translation(
    S: TransformationSemigroup, ideal: Sequence[int], y: int
) -> Dict[int, int]:
    """r_y: x -> x.y"""
    return {x: S.mul(x, y) for x in ideal}


def verify_ideal_structure(
    S: TransformationSemigroup,
    ideal: Sequence[int],
    other_ideals: Optional[Sequence[Sequence[int]]] = None,
) -> IdealStructureReport:
    """
    Certify the structure of a minimal left ideal M:

    (a) M has an idempotent p with x.p = x on M;
    (b) every right translation r_y of M is a bijection;
    (c) every equivariant self-map of M is some r_y;
    (d) x -> x.a is an equivariant bijection M -> M' for a in another
        minimal left ideal M';
    (e) x -> x.p retracts S onto M.
    """
    members = sorted(set(ideal))
    if not is_minimal_left_ideal(S, members):
        logger.warning(f"Rejected non-minimal ideal {members}")
        raise PreconditionError(
            "Not a minimal left ideal", details={"ideal": members}
        )
    member_set = set(members)
    if other_ideals is None:
        other_ideals = minimal_left_ideals(S)

    p = next(m for m in members if S.mul(m, m) == m)
    right_identity = all(S.mul(x, p) == x for x in members)
    certificates = [
        certificate(
            "ideal.right_identity",
            right_identity,
            idempotent=p,
            images=list(S.elements[p].images),
        )
    ]

    not_bijective = [
        y
        for y in members
        if set(right_translation(S, members, y).values()) != member_set
    ]
    certificates.append(
        certificate(
            "ideal.right_translations_bijective",
            not not_bijective,
            bound=f"|M| = {len(members)}",
            failures=not_bijective,
        )
    )

    translations = [right_translation(S, members, y) for y in members]
    maps = equivariant_self_maps(S, members)
    unmatched = [f for f in maps if f not in translations]
    certificates.append(
        certificate(
            "ideal.equivariant_maps_are_translations",
            not unmatched,
            bound="exhaustive",
            equivariant_maps=len(maps),
            unmatched=len(unmatched),
        )
    )

    failures = []
    for other in other_ideals:
        targets = set(other)
        for a in sorted(targets):
            images = {x: S.mul(x, a) for x in members}
            bijective = set(images.values()) == targets and len(targets) == len(
                members
            )
            equivariant = all(
                images[S.mul(s, x)] == S.mul(s, images[x])
                for s in range(len(S))
                for x in members
            )
            if not (bijective and equivariant):
                failures.append({"ideal": sorted(targets), "a": a})
    certificates.append(
        certificate(
            "ideal.isomorphic_to_other_ideals",
            not failures,
            bound=f"{len(other_ideals)} minimal ideals",
            failures=failures,
        )
    )

    retraction = {S.mul(s, p) for s in range(len(S))}
    fixes = all(S.mul(x, p) == x for x in members)
    certificates.append(
        certificate(
            "ideal.retraction",
            retraction == member_set and fixes,
            image=sorted(retraction),
        )
    )
    return IdealStructureReport(
        ideal=members, idempotent=p, certificates=certificates
    )


def random_selfmaps(n: int, count: int, rng: random.Random) -> List[SelfMap]:
    return [
        SelfMap(tuple(rng.randrange(n) for _ in range(n))) for _ in range(count)
    ]


# Actions


def validate_action(action: FiniteAction) -> None:
    for index, g in enumerate(action.generators):
        if g.n != action.n:
            raise DomainError(
                f"Generator {index} acts on {g.n} points, expected {action.n}"
            )
        if sorted(g.images) != list(range(action.n)):
            raise DomainError(
                f"Generator {index} is not a permutation",
                details={"generator": index},
            )


def group_elements(action: FiniteAction) -> List[SelfMap]:
    """The permutation group generated by the action, identity first"""
    validate_action(action)
    if action.elements is not None:
        return list(action.elements)
    identity = SelfMap.identity(action.n)
    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in action.generators:
            gh = g.then(h)
            if gh not in seen:
                seen.add(gh)
                elements.append(gh)
                queue.append(gh)
    return elements


def orbits(action: FiniteAction) -> List[List[int]]:
    validate_action(action)
    seen: Set[int] = set()
    partition = []
    for start in range(action.n):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in action.generators:
                y = g(x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        partition.append(sorted(orbit))
    return partition


def is_minimal(action: FiniteAction) -> bool:
    return len(orbits(action)) == 1


def is_k_transitive(action: FiniteAction, k: int) -> bool:
    """One orbit on k-tuples of distinct points, k in 1..3"""
    validate_action(action)
    if not 1 <= k <= 3:
        raise DomainError("k must be 1, 2 or 3")
    if action.n < k:
        raise DomainError(f"Need at least {k} points, got {action.n}")
    start = tuple(range(k))
    orbit = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for g in action.generators:
            image = tuple(g(x) for x in t)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    total = 1
    for i in range(k):
        total *= action.n - i
    return len(orbit) == total


def fixed_points(action: FiniteAction) -> List[int]:
    validate_action(action)
    return [
        x for x in range(action.n) if all(g(x) == x for g in action.generators)
    ]


def is_free(action: FiniteAction) -> bool:
    """Every non-identity group element moves every point"""
    identity = SelfMap.identity(action.n)
    return all(
        all(g(x) != x for x in range(action.n))
        for g in group_elements(action)
        if g != identity
    )


def regular_action(group: FiniteGroup) -> FiniteAction:
    """G acting on itself by left multiplication, h -> g*h"""
    generators = tuple(
        SelfMap(tuple(group.mul(g, h) for h in range(group.order)))
        for g in range(group.order)
        if g != group.identity
    )
    return FiniteAction(n=group.order, generators=generators)


def symmetric_action(n: int) -> FiniteAction:
    """S_n on {0, ..., n-1}, generated by (0 1) and the n-cycle"""
    if n < 1:
        raise DomainError("n must be positive")
    if n == 1:
        return FiniteAction(n=1, generators=())
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = tuple((x + 1) % n for x in range(n))
    return FiniteAction(n=n, generators=(SelfMap(tuple(swap)), SelfMap(cycle)))


# Chains and equivariant maps


def maximal_chains(n: int) -> List[MaximalChain]:
    """All n! chains {a1} < {a1, a2} < ... < X, lexicographic in (a1, ..., an)"""
    if n < 1:
        raise DomainError("n must be positive")
    return [
        MaximalChain(
            n=n, chain=tuple(frozenset(order[: k + 1]) for k in range(n))
        )
        for order in permutations(range(n))
    ]


def chain_action(g: SelfMap, chain: MaximalChain) -> MaximalChain:
    if g.n != chain.n:
        raise DomainError("Permutation and chain live on different sets")
    return MaximalChain(
        n=chain.n,
        chain=tuple(frozenset(g(x) for x in member) for member in chain.chain),
    )


def chain_target(action: FiniteAction) -> Tuple[List[MaximalChain], FiniteAction]:
    """The induced action of the same generators on the maximal chains"""
    validate_action(action)
    chains = maximal_chains(action.n)
    position = {c: i for i, c in enumerate(chains)}
    generators = tuple(
        SelfMap(tuple(position[chain_action(g, c)] for c in chains))
        for g in action.generators
    )
    return chains, FiniteAction(n=len(chains), generators=generators)


def _pair_closure(
    source: FiniteAction, target: FiniteAction
) -> List[Tuple[SelfMap, SelfMap]]:
    identity = (SelfMap.identity(source.n), SelfMap.identity(target.n))
    pairs = list(zip(source.generators, target.generators))
    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    while queue:
        g, h = queue.popleft()
        for a, b in pairs:
            product_pair = (g.then(a), h.then(b))
            if product_pair not in seen:
                seen.add(product_pair)
                elements.append(product_pair)
                queue.append(product_pair)
    return elements


def equivariant_maps(source: FiniteAction, target: FiniteAction) -> List[Map]:
    """
    All maps f: X -> T with f(g x) = g f(x), as image tuples in lexicographic
    order. Each orbit representative r may only go to a point fixed by the
    stabilizer of r; the rest of the orbit is forced. The search is
    exhaustive, so an empty list certifies that no equivariant map exists.
    """
    validate_action(source)
    validate_action(target)
    if len(source.generators) != len(target.generators):
        raise DomainError(
            "Actions have different numbers of generators",
            details={
                "source": len(source.generators),
                "target": len(target.generators),
            },
        )
    group = _pair_closure(source, target)
    per_orbit: List[List[Dict[int, int]]] = []
    for orbit in orbits(source):
        r = orbit[0]
        stabilizer = [h for g, h in group if g(r) == r]
        candidates = [
            t for t in range(target.n) if all(h(t) == t for h in stabilizer)
        ]
        options = []
        for t in candidates:
            assignment: Dict[int, int] = {}
            consistent = True
            for g, h in group:
                x, image = g(r), h(t)
                if assignment.setdefault(x, image) != image:
                    consistent = False
                    break
            if consistent:
                options.append(assignment)
        logger.debug(
            f"Orbit of {r}: {len(candidates)} stabilizer-fixed targets, "
            f"{len(options)} consistent"
        )
        if not options:
            return []
        per_orbit.append(options)

    results = []
    for choice in product(*per_orbit):
        f: Dict[int, int] = {}
        for assignment in choice:
            f.update(assignment)
        results.append(tuple(f[x] for x in range(source.n)))
    return sorted(results)


def brute_force_equivariant_maps(
    source: FiniteAction, target: FiniteAction, limit: int = 10**6
) -> List[Map]:
    """Check every one of the |T|^|X| maps against every generator"""
    if len(source.generators) != len(target.generators):
        raise DomainError("Actions have different numbers of generators")
    if target.n**source.n > limit:
        raise DomainError(
            f"|T|^|X| = {target.n ** source.n} exceeds the search limit {limit}"
        )
    pairs = list(zip(source.generators, target.generators))
    return [
        f
        for f in product(range(target.n), repeat=source.n)
        if all(f[g(x)] == h(f[x]) for g, h in pairs for x in range(source.n))
    ]


def is_laminar(family: Sequence[FrozenSet[int]]) -> bool:
    return all(
        not (a & b) or a <= b or b <= a
        for i, a in enumerate(family)
        for b in family[i + 1 :]
    )


def laminar_chain_map(
    family: Sequence[Sequence[int]], action: FiniteAction
) -> LaminarChainReport:
    """
    x -> C_x = {F in family : x in F}. Laminarity makes every C_x a chain, and
    an action permuting the family makes x -> C_x equivariant.
    """
    validate_action(action)
    n = action.n
    members = sorted(
        {frozenset(f) for f in family}, key=lambda f: (len(f), sorted(f))
    )
    full = frozenset(range(n))
    if full not in members or any(frozenset([x]) not in members for x in range(n)):
        raise DomainError("The family must contain X and every singleton")
    if any(not f <= full for f in members):
        raise DomainError("The family has members outside X")
    if not is_laminar(members):
        crossing = next(
            (sorted(a), sorted(b))
            for i, a in enumerate(members)
            for b in members[i + 1 :]
            if a & b and not (a <= b or b <= a)
        )
        raise DomainError(
            "The family is not laminar", details={"crossing": list(crossing)}
        )
    member_set = set(members)
    for index, g in enumerate(action.generators):
        for f in members:
            if frozenset(g(x) for x in f) not in member_set:
                raise DomainError(
                    f"Generator {index} does not preserve the family",
                    details={"generator": index, "member": sorted(f)},
                )

    chains = {x: [f for f in members if x in f] for x in range(n)}
    is_chain = all(
        a < b for chain in chains.values() for a, b in zip(chain, chain[1:])
    )
    equivariant = all(
        set(chains[g(x)]) == {frozenset(g(y) for y in f) for f in chains[x]}
        for g in action.generators
        for x in range(n)
    )
    is_maximal = all(
        [len(f) for f in chain] == list(range(1, n + 1)) for chain in chains.values()
    )
    return LaminarChainReport(
        chains={x: [sorted(f) for f in chain] for x, chain in chains.items()},
        is_chain=is_chain,
        equivariant=equivariant,
        is_maximal=is_maximal,
    )


def binary_laminar_family(depth: int) -> List[List[int]]:
    """Blocks of the balanced binary tree on 2**depth points"""
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    size = 2**depth
    family = []
    for level in range(depth + 1):
        block = 2**level
        family.extend(
            list(range(start, start + block)) for start in range(0, size, block)
        )
    return family


def binary_tree_automorphisms(depth: int) -> FiniteAction:
    """Generators swapping the two halves of every block of the binary tree"""
    size = 2**depth
    generators = []
    for level in range(1, depth + 1):
        block = 2**level
        half = block // 2
        for start in range(0, size, block):
            images = list(range(size))
            for offset in range(half):
                images[start + offset] = start + half + offset
                images[start + half + offset] = start + offset
            generators.append(SelfMap(tuple(images)))
    return FiniteAction(n=size, generators=tuple(generators))


# Linear orders


def _relation_mask(pairs, n: int) -> int:
    mask = 0
    for a, b in pairs:
        mask |= 1 << (a * n + b)
    return mask


def _permute_mask(mask: int, g: SelfMap, n: int) -> int:
    image = 0
    for a in range(n):
        for b in range(n):
            if mask >> (a * n + b) & 1:
                image |= 1 << (g(a) * n + g(b))
    return image


def is_linear_order(mask: int, n: int) -> bool:
    """Strict total order: irreflexive, total, transitive"""
    rel = [[bool(mask >> (a * n + b) & 1) for b in range(n)] for a in range(n)]
    for a in range(n):
        if rel[a][a]:
            return False
        for b in range(a + 1, n):
            if rel[a][b] == rel[b][a]:
                return False
    return all(
        rel[a][c]
        for a in range(n)
        for b in range(n)
        for c in range(n)
        if rel[a][b] and rel[b][c]
    )


def linear_orders(n: int) -> List[int]:
    """All strict linear orders on n points as bitmasks of 2^(E x E)"""
    return sorted(
        _relation_mask(
            ((order[i], order[j]) for i in range(n) for j in range(i + 1, n)), n
        )
        for order in permutations(range(n))
    )


def linear_orders_flow(n: int) -> LinearOrdersReport:
    """
    S_n acting on the linear orders of n points by relabeling. The orders form
    an invariant subset of 2^(E x E) on which the action is transitive, hence
    a minimal flow. For n <= 3 the orbits of the whole of 2^(E x E) are
    counted as well.
    """
    if n < 1:
        raise DomainError("n must be positive")
    action = symmetric_action(n)
    orders = linear_orders(n)
    order_set = set(orders)
    invariant = all(
        _permute_mask(mask, g, n) in order_set and is_linear_order(mask, n)
        for mask in orders
        for g in action.generators
    )

    order_orbits = 0
    seen_orders: Set[int] = set()
    for start in orders:
        if start in seen_orders:
            continue
        order_orbits += 1
        seen_orders.add(start)
        queue = deque([start])
        while queue:
            mask = queue.popleft()
            for g in action.generators:
                image = _permute_mask(mask, g, n)
                if image not in seen_orders:
                    seen_orders.add(image)
                    queue.append(image)

    relation_orbits = None
    relation_orbit_sizes = None
    if n <= 3:
        elements = group_elements(action)
        seen: Set[int] = set()
        sizes: Dict[int, int] = {}
        for mask in range(1 << (n * n)):
            if mask in seen:
                continue
            relation_orbit = {_permute_mask(mask, g, n) for g in elements}
            seen |= relation_orbit
            sizes[len(relation_orbit)] = sizes.get(len(relation_orbit), 0) + 1
        relation_orbits = sum(sizes.values())
        relation_orbit_sizes = dict(sorted(sizes.items()))

    logger.info(f"Linear orders flow on {n} points: {len(orders)} orders")
    return LinearOrdersReport(
        n=n,
        orders=len(orders),
        invariant=invariant,
        orbits=order_orbits,
        minimal=invariant and order_orbits == 1,
        relation_orbits=relation_orbits,
        relation_orbit_sizes=relation_orbit_sizes,
    )
