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

"""The 2-nerve of a strict 2-groupoid.

Vertices are objects, edges are 1-cells, a 2-simplex is a triangle
(g01, g02, g12; a: g02 ⇒ g12∘g01) and a 3-simplex is a tetrahedron of such
triangles satisfying

    (a123∘1_{g01}) * a013 = (1_{g23}∘a012) * a023.

Simplices are content-addressed: a triangle or tetrahedron is the tuple of its
cells, so face maps need no tables.
"""

import logging
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass
from functools import cached_property

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.union_find import UnionFind
from app.tools.homotopy import WeakEquivalenceResult
from app.tools.simplicial_set import CoskeletalSSet, FiniteCoskSSet, Simplex, materialize, sset_pi0, sset_product
from app.tools.two_groupoid import (
    Cell,
    TwoFunctor,
    TwoGroupoid,
    ValidationReport,
    product,
    projection,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NerveTriangle:
    """a: g02 ⇒ g12∘g01 over the vertices x0, x1, x2."""

    g01: Cell
    g02: Cell
    g12: Cell
    a: Cell

    def edge(self, i: int, j: int) -> Cell:
        return {(0, 1): self.g01, (0, 2): self.g02, (1, 2): self.g12}[(i, j)]


@dataclass(frozen=True)
class NerveTetrahedron:
    g01: Cell
    g02: Cell
    g03: Cell
    g12: Cell
    g13: Cell
    g23: Cell
    a012: Cell
    a013: Cell
    a023: Cell
    a123: Cell

    def edge(self, i: int, j: int) -> Cell:
        return getattr(self, f"g{i}{j}")

    def two_cell(self, i: int, j: int, k: int) -> Cell:
        return getattr(self, f"a{i}{j}{k}")

    def face(self, i: int) -> NerveTriangle:
        p, q, r = (v for v in range(4) if v != i)
        return NerveTriangle(self.edge(p, q), self.edge(p, r), self.edge(q, r), self.two_cell(p, q, r))


def triangle_is_typed(groupoid: TwoGroupoid, triangle: NerveTriangle) -> bool:
    G, t = groupoid, triangle
    if G.one_cell_target(t.g01) != G.one_cell_source(t.g12):
        return False
    if G.one_cell_source(t.g02) != G.one_cell_source(t.g01) or G.one_cell_target(t.g02) != G.one_cell_target(t.g12):
        return False
    return (G.two_cell_source(t.a), G.two_cell_target(t.a)) == (t.g02, G.compose1(t.g01, t.g12))


def tetrahedron_commutes(groupoid: TwoGroupoid, t: NerveTetrahedron) -> bool:
    """(a123∘1_{g01}) * a013 == (1_{g23}∘a012) * a023."""
    G = groupoid
    left = G.vertical_compose(t.a013, G.whisker_before(t.g01, t.a123))
    right = G.vertical_compose(t.a023, G.whisker_after(t.a012, t.g23))
    return left == right


def tetrahedron_from_faces(groupoid: TwoGroupoid, faces: Sequence[NerveTriangle]) -> NerveTetrahedron | None:
    """The tetrahedron with faces (d0, d1, d2, d3), or None if the faces do not
    match along their edges or the tetrahedron does not commute."""
    t0, t1, t2, t3 = faces
    if not (
        t3.g01 == t2.g01
        and t3.g02 == t1.g01
        and t3.g12 == t0.g01
        and t2.g02 == t1.g02
        and t2.g12 == t0.g02
        and t1.g12 == t0.g12
    ):
        return None
    tetrahedron = NerveTetrahedron(
        g01=t3.g01, g02=t3.g02, g03=t2.g02, g12=t3.g12, g13=t2.g12, g23=t1.g12,
        a012=t3.a, a013=t2.a, a023=t1.a, a123=t0.a,
    )  # fmt: skip
    return tetrahedron if tetrahedron_commutes(groupoid, tetrahedron) else None


class TwoNerve(CoskeletalSSet):
    """The 2-nerve of G, computed on demand."""

    def __init__(self, groupoid: TwoGroupoid) -> None:
        self.groupoid = groupoid
        self.name = f"N({groupoid.name})"

    # -- vertex bookkeeping ---------------------------------------------------

    def _vertex(self, n: int, simplex: Simplex, p: int) -> Cell:
        G = self.groupoid
        if n == 0:
            return simplex
        if n == 1:
            return G.one_cell_source(simplex) if p == 0 else G.one_cell_target(simplex)
        first_edge = simplex.g01
        return G.one_cell_source(first_edge) if p == 0 else G.one_cell_target(simplex.edge(0, p))

    def _from_vertex_map(self, n: int, simplex: Simplex, vertex_map: Sequence[int]) -> Simplex:
        """The (len-1)-simplex σ∘θ for a monotone θ given by `vertex_map`."""
        G = self.groupoid

        def edge(i: int, j: int) -> Cell:
            p, q = vertex_map[i], vertex_map[j]
            if p == q:
                return G.identity1(self._vertex(n, simplex, p))
            return simplex if n == 1 else simplex.edge(p, q)

        def two_cell(i: int, j: int, k: int) -> Cell:
            if n == 2 and (vertex_map[i], vertex_map[j], vertex_map[k]) == (0, 1, 2):
                return simplex.a
            return G.identity2(edge(i, k))

        size = len(vertex_map)
        if size == 2:
            return edge(0, 1)
        if size == 3:
            return NerveTriangle(edge(0, 1), edge(0, 2), edge(1, 2), two_cell(0, 1, 2))
        return NerveTetrahedron(
            edge(0, 1), edge(0, 2), edge(0, 3), edge(1, 2), edge(1, 3), edge(2, 3),
            two_cell(0, 1, 2), two_cell(0, 1, 3), two_cell(0, 2, 3), two_cell(1, 2, 3),
        )  # fmt: skip

    # -- the simplicial structure ---------------------------------------------

    def simplices(self, n: int) -> Sequence[Simplex]:
        return self._levels[n]

    @cached_property
    def _levels(self) -> list[list[Simplex]]:
        G = self.groupoid
        triangles = [
            NerveTriangle(g01, g02, g12, a)
            for g01 in G.one_cells()
            for g12 in G.one_cells_from(G.one_cell_target(g01))
            for g02 in G.hom1(G.one_cell_source(g01), G.one_cell_target(g12))
            for a in G.hom2(g02, G.compose1(g01, g12))
        ]
        tetrahedra = []
        for base in triangles:
            x0, x1 = G.one_cell_source(base.g01), G.one_cell_target(base.g01)
            for g23 in G.one_cells_from(G.one_cell_target(base.g12)):
                x3 = G.one_cell_target(g23)
                whiskered_base = G.whisker_after(base.a, g23)
                for g13 in G.hom1(x1, x3):
                    for a123 in G.hom2(g13, G.compose1(base.g12, g23)):
                        whiskered_top = G.whisker_before(base.g01, a123)
                        for g03 in G.hom1(x0, x3):
                            for a013 in G.hom2(g03, G.compose1(base.g01, g13)):
                                a023 = G.vertical_compose(
                                    G.vertical_compose(a013, whiskered_top), G.vertical_inverse(whiskered_base)
                                )
                                tetrahedra.append(
                                    NerveTetrahedron(
                                        base.g01, base.g02, g03, base.g12, g13, g23,
                                        base.a, a013, a023, a123,
                                    )  # fmt: skip
                                )
        levels = [list(G.objects()), list(G.one_cells()), triangles, tetrahedra]
        logger.debug(f"[two_nerve] {self.name}: levels {[len(level) for level in levels]}")
        return levels

    def face(self, n: int, i: int, simplex: Simplex) -> Simplex:
        G = self.groupoid
        if n == 1:
            return G.one_cell_target(simplex) if i == 0 else G.one_cell_source(simplex)
        if n == 2:
            return (simplex.g12, simplex.g02, simplex.g01)[i]
        return simplex.face(i)

    def degeneracy(self, n: int, i: int, simplex: Simplex) -> Simplex:
        if n == 0:
            return self.groupoid.identity1(simplex)
        vertex_map = [p if p <= i else p - 1 for p in range(n + 2)]
        return self._from_vertex_map(n, simplex, vertex_map)

    def fillers(self, n: int, boundary: Sequence[Simplex]) -> list[Simplex]:
        G = self.groupoid
        if n == 0:
            return list(G.objects())
        if n == 1:
            target, source = boundary
            return list(G.hom1(source, target))
        if n == 2:
            g12, g02, g01 = boundary
            if G.one_cell_target(g01) != G.one_cell_source(g12):
                return []
            if (G.one_cell_source(g02), G.one_cell_target(g02)) != (G.one_cell_source(g01), G.one_cell_target(g12)):
                return []
            return [NerveTriangle(g01, g02, g12, a) for a in G.hom2(g02, G.compose1(g01, g12))]
        tetrahedron = tetrahedron_from_faces(G, boundary)
        return [] if tetrahedron is None else [tetrahedron]

    def is_filler(self, n: int, boundary: Sequence[Simplex], simplex: Simplex) -> bool:
        G = self.groupoid
        if n == 0:
            return simplex in G.objects()
        if self.boundary(n, simplex) != tuple(boundary):
            return False
        if n == 1:
            return True
        if n == 2:
            return triangle_is_typed(G, simplex)
        return tetrahedron_commutes(G, simplex)

    def horn_fillers(self, n: int, k: int, horn: Sequence[Simplex | None]) -> list[Simplex]:
        """Solves the missing 2-cell of a 3-horn from the commuting equation."""
        if n != 3:
            return super().horn_fillers(n, k, horn)
        G = self.groupoid
        edges: dict[tuple[int, int], Cell] = {}
        cells: dict[tuple[int, int, int], Cell] = {}
        for i, triangle in enumerate(horn):
            if i == k:
                continue
            p, q, r = (v for v in range(4) if v != i)
            for pair, edge in (((p, q), triangle.g01), ((p, r), triangle.g02), ((q, r), triangle.g12)):
                if edges.setdefault(pair, edge) != edge:
                    return []
            cells[(p, q, r)] = triangle.a
        g01, g23 = edges[(0, 1)], edges[(2, 3)]
        if k == 0:
            rest = G.vertical_chain(
                G.vertical_inverse(cells[(0, 1, 3)]), cells[(0, 2, 3)], G.whisker_after(cells[(0, 1, 2)], g23)
            )
            cells[(1, 2, 3)] = G.whisker_before(G.inverse1(g01), rest)
        elif k == 1:
            cells[(0, 2, 3)] = G.vertical_compose(
                G.vertical_compose(cells[(0, 1, 3)], G.whisker_before(g01, cells[(1, 2, 3)])),
                G.vertical_inverse(G.whisker_after(cells[(0, 1, 2)], g23)),
            )
        elif k == 2:
            cells[(0, 1, 3)] = G.vertical_compose(
                G.vertical_compose(cells[(0, 2, 3)], G.whisker_after(cells[(0, 1, 2)], g23)),
                G.vertical_inverse(G.whisker_before(g01, cells[(1, 2, 3)])),
            )
        else:
            rest = G.vertical_chain(
                G.vertical_inverse(cells[(0, 2, 3)]), cells[(0, 1, 3)], G.whisker_before(g01, cells[(1, 2, 3)])
            )
            cells[(0, 1, 2)] = G.whisker_after(rest, G.inverse1(g23))
        tetrahedron = NerveTetrahedron(
            edges[(0, 1)], edges[(0, 2)], edges[(0, 3)], edges[(1, 2)], edges[(1, 3)], edges[(2, 3)],
            cells[(0, 1, 2)], cells[(0, 1, 3)], cells[(0, 2, 3)], cells[(1, 2, 3)],
        )  # fmt: skip
        if not all(triangle_is_typed(G, tetrahedron.face(i)) for i in range(4)):
            return []
        return [tetrahedron] if tetrahedron_commutes(G, tetrahedron) else []

    def to_finite(self, budget: SearchBudget | int | None = None) -> FiniteCoskSSet:
        return materialize(self, budget)


def two_nerve(groupoid: TwoGroupoid) -> TwoNerve:
    """The 2-nerve; levels are computed lazily on first access."""
    return TwoNerve(groupoid)


# ---------------------------------------------------------------------------
# Simplicial maps
# ---------------------------------------------------------------------------


class SimplicialMap:
    """A map of 3-coskeletal simplicial sets, given level-wise by `apply`."""

    def __init__(
        self,
        source: CoskeletalSSet,
        target: CoskeletalSSet,
        apply: Callable[[int, Simplex], Simplex],
        name: str = "f",
    ) -> None:
        self.source = source
        self.target = target
        self._apply = apply
        self.name = name

    def __call__(self, n: int, simplex: Simplex) -> Simplex:
        return self._apply(n, simplex)

    def check(self, budget: SearchBudget | int | None = None) -> ValidationReport:
        """Verifies that the map commutes with all faces and degeneracies."""
        budget = ensure_budget(budget, "simplicial_map")
        X, Y = self.source, self.target
        report = ValidationReport(self.name)
        for n in range(4):
            for s in X.simplices(n):
                budget.spend()
                image = self(n, s)
                for i in range(n + 1 if n else 0):
                    if Y.face(n, i, image) != self(n - 1, X.face(n, i, s)):
                        report.add("typing", f"d{i} not preserved on {s!r}")
                if n < 3:
                    for i in range(n + 1):
                        if Y.degeneracy(n, i, image) != self(n + 1, X.degeneracy(n, i, s)):
                            report.add("typing", f"s{i} not preserved on {s!r}")
        return report


def nerve_of_functor(functor: TwoFunctor) -> SimplicialMap:
    """N(F), applied level-wise to the cells of each simplex.

    Raises:
        RuntimeError: If the image of a tetrahedron does not commute, which
            means F is not a 2-functor.
    """
    F = functor
    source, target = two_nerve(F.source), two_nerve(F.target)

    def apply(n: int, simplex: Simplex) -> Simplex:
        if n == 0:
            return F.on_object(simplex)
        if n == 1:
            return F.on_one_cell(simplex)
        if n == 2:
            return NerveTriangle(
                F.on_one_cell(simplex.g01), F.on_one_cell(simplex.g02), F.on_one_cell(simplex.g12), F.on_two_cell(simplex.a)
            )
        image = NerveTetrahedron(
            *(F.on_one_cell(simplex.edge(i, j)) for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
            *(F.on_two_cell(simplex.two_cell(*ijk)) for ijk in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))),
        )
        if not tetrahedron_commutes(F.target, image):
            raise RuntimeError(f"[nerve_of_functor] {F.name} sends a tetrahedron to a non-commutative one")
        return image

    return SimplicialMap(source, target, apply, name=f"N({F.name})")


def check_nerve_product(first: TwoGroupoid, second: TwoGroupoid, budget: SearchBudget | int | None = None) -> bool:
    """N(G × H) ≅ N(G) × N(H) through the nerves of the two projections."""
    budget = ensure_budget(budget, "check_nerve_product")
    P = product(first, second, budget)
    left_map = nerve_of_functor(projection(P, 0, first))
    right_map = nerve_of_functor(projection(P, 1, second))
    nerve = two_nerve(P)
    target = sset_product(two_nerve(first), two_nerve(second), budget)
    images_by_level: list[dict[Simplex, Simplex]] = []
    for n in range(4):
        images: dict[Simplex, Simplex] = {}
        images_by_level.append(images)
        for s in nerve.simplices(n):
            budget.spend()
            images[s] = (left_map(n, s), right_map(n, s))
        if len(set(images.values())) != len(images) or set(images.values()) != set(target.simplices(n)):
            logger.info(f"[check_nerve_product] level {n}: no bijection ({len(images)} vs {len(target.simplices(n))})")
            return False
        for s, image in images.items():
            for i in range(n + 1 if n else 0):
                if images_by_level[n - 1][nerve.face(n, i, s)] != target.face(n, i, image):
                    logger.info(f"[check_nerve_product] level {n}: d{i} not preserved on {s!r}")
                    return False
    return True


# ---------------------------------------------------------------------------
# Homotopy read off the nerve
# ---------------------------------------------------------------------------


@dataclass
class NerveHomotopy:
    """Path components, and the π₁/π₂ classes of simplices at one vertex."""

    basepoint: Hashable
    pi0: list[list[Simplex]]
    pi1_classes: list[list[Simplex]]
    pi2_classes: list[list[Simplex]]

    @property
    def orders(self) -> tuple[int, int, int]:
        return len(self.pi0), len(self.pi1_classes), len(self.pi2_classes)


def nerve_homotopy(sset: CoskeletalSSet, x: Simplex) -> NerveHomotopy:
    """Combinatorial homotopy of a Kan complex at the vertex x.

    Loops e, e' at x are identified when a 2-simplex has faces (s₀x, e', e);
    spherical 2-simplices σ, σ' when a 3-simplex has faces (s₀s₀x, s₀s₀x, σ, σ').
    """
    X = sset
    unit = X.degeneracy(0, 0, x)
    loops = [e for e in X.simplices(1) if X.face(1, 0, e) == x and X.face(1, 1, e) == x]
    loop_set = set(loops)
    loop_classes = UnionFind(loops)
    for triangle in X.simplices_with_faces(2, {0: unit}):
        first, second = X.face(2, 2, triangle), X.face(2, 1, triangle)
        if first in loop_set and second in loop_set:
            loop_classes.union(first, second)

    spheres = X.simplices_with_faces(2, {0: unit, 1: unit, 2: unit})
    sphere_set = set(spheres)
    base = X.degeneracy(1, 0, unit)
    sphere_classes = UnionFind(spheres)
    for tetrahedron in X.simplices_with_faces(3, {0: base, 1: base}):
        first, second = X.face(3, 2, tetrahedron), X.face(3, 3, tetrahedron)
        if first in sphere_set and second in sphere_set:
            sphere_classes.union(first, second)
    return NerveHomotopy(x, sset_pi0(X), loop_classes.classes(), sphere_classes.classes())


def nerve_weak_equivalence(simplicial_map: SimplicialMap) -> WeakEquivalenceResult:
    """Tests whether a map of Kan nerves is bijective on π₀, π₁ and π₂."""
    f = simplicial_map
    X, Y = f.source, f.target
    source_components = sset_pi0(X)
    target_components = sset_pi0(Y)
    component_of = {v: position for position, members in enumerate(target_components) for v in members}
    images = {component_of[f(0, members[0])] for members in source_components}
    if len(images) != len(source_components) or len(images) != len(target_components):
        return WeakEquivalenceResult(False, "pi0")
    for members in source_components:
        x = members[0]
        source_homotopy, target_homotopy = nerve_homotopy(X, x), nerve_homotopy(Y, f(0, x))
        for dim, witness in ((1, "pi1"), (2, "pi2")):
            source_classes = source_homotopy.pi1_classes if dim == 1 else source_homotopy.pi2_classes
            target_classes = target_homotopy.pi1_classes if dim == 1 else target_homotopy.pi2_classes
            class_of = {s: position for position, members_ in enumerate(target_classes) for s in members_}
            mapped = {class_of[f(dim, cls[0])] for cls in source_classes}
            if len(mapped) != len(source_classes) or len(mapped) != len(target_classes):
                return WeakEquivalenceResult(False, witness, [f"at {x!r}"])
    return WeakEquivalenceResult(True)
