# Copyright 2026 The desc2gpd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Homotopy invariants of 2-groupoids and the algebraic weak-equivalence test."""

import logging
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import StructuralError
from app.app_utils.union_find import UnionFind
from app.tools.groups import FiniteGroup
from app.tools.two_groupoid import TwoFunctor, TwoGroupoid

logger = logging.getLogger(__name__)


@dataclass
class HomotopyGroups:
    """π₀ of a 2-groupoid together with π₁ and π₂ at one basepoint.

    `pi1_classes[i]` lists the automorphisms of the basepoint forming element i
    of `pi1`; `pi2_elements[i]` is the 2-cell 1_x ⇒ 1_x that is element i of `pi2`.
    """

    basepoint: Hashable
    pi0: list[list[Hashable]]
    pi1: FiniteGroup
    pi1_classes: list[list[Hashable]]
    pi2: FiniteGroup
    pi2_elements: list[Hashable]

    @property
    def orders(self) -> tuple[int, int, int]:
        return len(self.pi0), self.pi1.order, self.pi2.order


@dataclass
class WeakEquivalenceResult:
    """Verdict of a weak-equivalence test; `witness` names the failing invariant."""

    is_equivalence: bool
    witness: str | None = None
    details: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.is_equivalence


def pi0_classes(groupoid: TwoGroupoid, budget: SearchBudget | int | None = None) -> list[list[Hashable]]:
    """Objects modulo the existence of a 1-cell, in object order.

    Edges come from `generating_one_cells_from`, whose composites reach every
    1-cell, so the components are exact.
    """
    budget = ensure_budget(budget, "pi0")
    objects = list(groupoid.objects())
    index = {x: position for position, x in enumerate(objects)}
    rows, cols = [], []
    for x in objects:
        for f in groupoid.generating_one_cells_from(x):
            budget.spend()
            rows.append(index[x])
            cols.append(index[groupoid.one_cell_target(f)])
    size = len(objects)
    adjacency = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    _, labels = connected_components(adjacency, directed=True, connection="weak")
    grouped: dict[int, list[Hashable]] = {}
    for x in objects:
        grouped.setdefault(int(labels[index[x]]), []).append(x)
    return list(grouped.values())


def _group_from_classes(
    representatives: Sequence[Hashable],
    class_of: dict[Hashable, int],
    multiply: Callable[[Hashable, Hashable], Hashable],
    name: str,
) -> FiniteGroup:
    table = [[class_of[multiply(first, second)] for second in representatives] for first in representatives]
    return FiniteGroup(table, name=name)


def homotopy_groups(
    groupoid: TwoGroupoid, x: Hashable, budget: SearchBudget | int | None = None
) -> HomotopyGroups:
    """π₀(G), π₁(G, x) and π₂(G, x).

    π₁ is the group of automorphisms of x modulo the existence of a 2-cell, with
    the product induced by `compose1`; π₂ is the group of 2-cells 1_x ⇒ 1_x under
    vertical composition.

    Raises:
        StructuralError: If `x` is not an object, or π₂ is not abelian (which
            only happens for tables that are not 2-groupoids).
    """
    budget = ensure_budget(budget, "homotopy_groups")
    G = groupoid
    if x not in set(G.objects()):
        raise StructuralError(f"{x!r} is not an object of {G.name}")
    components = pi0_classes(G, budget)

    loops = list(G.hom1(x, x))
    uf = UnionFind(loops)
    for f in loops:
        for a in G.generating_two_cells_from(f):
            budget.spend()
            uf.union(f, G.two_cell_target(a))
    pi1_classes = uf.classes()
    class_of = {f: position for position, members in enumerate(pi1_classes) for f in members}
    pi1 = _group_from_classes(
        [members[0] for members in pi1_classes], class_of, G.compose1, name=f"pi1({G.name})"
    )

    unit = G.identity1(x)
    spheres = list(G.hom2(unit, unit))
    budget.spend(len(spheres) ** 2)
    sphere_index = {a: position for position, a in enumerate(spheres)}
    pi2 = _group_from_classes(spheres, sphere_index, G.vertical_compose, name=f"pi2({G.name})")
    if not pi2.is_abelian():
        raise StructuralError(f"pi2 of {G.name} at {x!r} is not abelian")

    logger.debug(f"[homotopy_groups] {G.name} at {x!r}: orders {len(components)}, {pi1.order}, {pi2.order}")
    return HomotopyGroups(x, components, pi1, pi1_classes, pi2, spheres)


def _is_bijection(images: dict[Hashable, Hashable], codomain: Sequence[Hashable]) -> bool:
    return len(set(images.values())) == len(images) == len(codomain) and set(images.values()) == set(codomain)


def is_weak_equivalence(functor: TwoFunctor, budget: SearchBudget | int | None = None) -> WeakEquivalenceResult:
    """Tests whether F induces a bijection on π₀ and isomorphisms on π₁ and π₂.

    π₁ and π₂ are compared at one basepoint per component of the source; the
    groups at two objects joined by a 1-cell are isomorphic through that 1-cell.
    Functors declaring a `componentwise` base functor (indexed powers over a
    non-empty index set) are tested on the base functor.
    """
    budget = ensure_budget(budget, "is_weak_equivalence")
    componentwise = getattr(functor, "componentwise", None)
    if componentwise is not None:
        base_functor, width = componentwise
        if width == 0:
            return WeakEquivalenceResult(True, details=["empty index set: both sides are terminal"])
        return is_weak_equivalence(base_functor, budget)

    G, H, F = functor.source, functor.target, functor
    source_components = pi0_classes(G, budget)
    target_components = pi0_classes(H, budget)
    target_component_of = {y: position for position, members in enumerate(target_components) for y in members}
    pi0_images = {position: target_component_of[F.on_object(members[0])] for position, members in enumerate(source_components)}
    if not _is_bijection(pi0_images, list(range(len(target_components)))):
        detail = f"pi0: {len(source_components)} component(s) map onto {len(set(pi0_images.values()))} of {len(target_components)}"
        logger.info(f"[is_weak_equivalence] {F.name}: {detail}")
        return WeakEquivalenceResult(False, "pi0", [detail])

    details = []
    for members in source_components:
        x = members[0]
        source_groups = homotopy_groups(G, x, budget)
        target_groups = homotopy_groups(H, F.on_object(x), budget)

        target_class_of = {f: position for position, loop_class in enumerate(target_groups.pi1_classes) for f in loop_class}
        pi1_images = {
            position: target_class_of[F.on_one_cell(loop_class[0])]
            for position, loop_class in enumerate(source_groups.pi1_classes)
        }
        if not _is_bijection(pi1_images, list(range(target_groups.pi1.order))):
            detail = f"pi1 at {x!r}: orders {source_groups.pi1.order} -> {target_groups.pi1.order}"
            return WeakEquivalenceResult(False, "pi1", [detail])

        pi2_images = {a: F.on_two_cell(a) for a in source_groups.pi2_elements}
        if not _is_bijection(pi2_images, target_groups.pi2_elements):
            detail = f"pi2 at {x!r}: orders {source_groups.pi2.order} -> {target_groups.pi2.order}"
            return WeakEquivalenceResult(False, "pi2", [detail])
        details.append(f"{x!r}: orders {source_groups.orders}")

    logger.debug(f"[is_weak_equivalence] {F.name}: equivalence")
    return WeakEquivalenceResult(True, details=details)
