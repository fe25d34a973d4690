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

"""Fixture generators: deloopings, crossed modules, cover complexes, Čech
cosimplicial 2-groupoids, and the abelian cohomology oracle.
"""

import logging
from collections.abc import Callable, Hashable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations, product
from math import gcd, prod
from typing import Any

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import DocumentError, StructuralError
from app.app_utils.union_find import UnionFind
from app.tools.cosimplicial import (
    TOP_DEGREE,
    LevelwiseMap,
    RestrictedCosimplicial2Groupoid,
    apply_functor,
)
from app.tools.groups import FiniteGroup
from app.tools.two_groupoid import (
    Cell,
    TableTwoFunctor,
    TableTwoGroupoid,
    TwoFunctor,
    TwoGroupoid,
    product as product_2gpd,
    projection,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Generators of small 2-groupoids
# ---------------------------------------------------------------------------


def delooping(group: FiniteGroup) -> TableTwoGroupoid:
    """B(G): one object, 1-cells the elements of G, only identity 2-cells."""
    elements = list(group.elements)
    return TableTwoGroupoid(
        objects=[0],
        one_cells={g: (0, 0) for g in elements},
        id1={0: group.identity},
        comp1={(f, g): group.multiply(g, f) for f in elements for g in elements},
        two_cells={g: (g, g) for g in elements},
        id2={g: g for g in elements},
        vcomp={(g, g): g for g in elements},
        hcomp={(f, g): group.multiply(g, f) for f in elements for g in elements},
        name=f"B({group.name})",
    )


def double_delooping(group: FiniteGroup) -> TableTwoGroupoid:
    """B²(A): one object, one 1-cell, 2-cells A with both compositions the product.

    Raises:
        StructuralError: If the group is not abelian.
    """
    if not group.is_abelian():
        raise StructuralError(f"double delooping needs an abelian group, {group.name} is not")
    elements = list(group.elements)
    table = {(a, b): group.multiply(b, a) for a in elements for b in elements}
    return TableTwoGroupoid(
        objects=[0],
        one_cells={0: (0, 0)},
        id1={0: 0},
        comp1={(0, 0): 0},
        two_cells={a: (0, 0) for a in elements},
        id2={0: group.identity},
        vcomp=table,
        hcomp=dict(table),
        name=f"B2({group.name})",
    )


def indiscrete_groupoid(size: int) -> TableTwoGroupoid:
    """Objects 0..size-1, exactly one 1-cell between any two, identity 2-cells."""
    objects = list(range(size))
    cells = {(x, y): x * size + y for x in objects for y in objects}
    return TableTwoGroupoid(
        objects=objects,
        one_cells={f: pair for pair, f in cells.items()},
        id1={x: cells[(x, x)] for x in objects},
        comp1={(cells[(x, y)], cells[(y, z)]): cells[(x, z)] for x in objects for y in objects for z in objects},
        two_cells={f: (f, f) for f in cells.values()},
        id2={f: f for f in cells.values()},
        vcomp={(f, f): f for f in cells.values()},
        hcomp={(cells[(x, y)], cells[(y, z)]): cells[(x, z)] for x in objects for y in objects for z in objects},
        name=f"I{size}",
    )


def disjoint_union(first: TableTwoGroupoid, second: TableTwoGroupoid) -> TableTwoGroupoid:
    """G ⊔ H; a cell c of G becomes (0, c) and a cell c of H becomes (1, c)."""
    merged: dict[str, Any] = {"objects": []}
    merged.update({key: {} for key in ("one_cells", "id1", "comp1", "two_cells", "id2", "vcomp", "hcomp")})
    for side, groupoid in enumerate((first, second)):
        tables = groupoid.tables()
        merged["objects"] += [(side, x) for x in tables["objects"]]
        for key in ("one_cells", "two_cells"):
            for cell, (source, target) in tables[key].items():
                merged[key][(side, cell)] = ((side, source), (side, target))
        for key in ("id1", "id2"):
            for cell, unit in tables[key].items():
                merged[key][(side, cell)] = (side, unit)
        for key in ("comp1", "vcomp", "hcomp"):
            for (p, q), composite in tables[key].items():
                merged[key][((side, p), (side, q))] = (side, composite)
    return TableTwoGroupoid(**merged, name=f"{first.name}+{second.name}")


def adjoin_isomorphic_object(groupoid: TwoGroupoid) -> tuple[TableTwoGroupoid, TableTwoFunctor]:
    """I₂ × G, a copy of G with every object doubled by an isomorphic twin,
    together with the projection back to G (a weak equivalence)."""
    adjoined = product_2gpd(indiscrete_groupoid(2), groupoid)
    adjoined.name = f"adj({groupoid.name})"
    return adjoined, projection(adjoined, 1, groupoid)


# ---------------------------------------------------------------------------
# Crossed modules
# ---------------------------------------------------------------------------


@dataclass
class CrossedModule:
    """∂: H → G with a left action of G on H; `action[g][h]` is ᵍh."""

    top: FiniteGroup
    bottom: FiniteGroup
    boundary: tuple[int, ...]
    action: tuple[tuple[int, ...], ...]
    name: str = "X"

    def __post_init__(self) -> None:
        self.validate()

    @classmethod
    def from_group(cls, group: FiniteGroup) -> "CrossedModule":
        """1 → G."""
        trivial = FiniteGroup.trivial()
        return cls(trivial, group, (group.identity,), tuple((0,) for _ in group.elements), name=f"1->{group.name}")

    @classmethod
    def from_abelian(cls, group: FiniteGroup) -> "CrossedModule":
        """A → 1."""
        trivial = FiniteGroup.trivial()
        return cls(group, trivial, tuple(0 for _ in group.elements), (tuple(group.elements),), name=f"{group.name}->1")

    def validate(self) -> None:
        """Raises StructuralError unless ∂ is an equivariant homomorphism satisfying Peiffer."""
        H, G = self.top, self.bottom
        if len(self.boundary) != H.order or not H.is_homomorphism(G, self.boundary):
            raise StructuralError(f"{self.name}: boundary is not a homomorphism")
        if len(self.action) != G.order:
            raise StructuralError(f"{self.name}: action has {len(self.action)} rows for {G.order} elements")
        for g in G.elements:
            row = self.action[g]
            if sorted(row) != list(H.elements) or not H.is_homomorphism(H, row):
                raise StructuralError(f"{self.name}: element {g} does not act by an automorphism")
            for k in G.elements:
                if any(self.action[G.multiply(g, k)][h] != row[self.action[k][h]] for h in H.elements):
                    raise StructuralError(f"{self.name}: action is not compatible with the product of G")
        if list(self.action[G.identity]) != list(H.elements):
            raise StructuralError(f"{self.name}: identity of G does not act trivially")
        for g in G.elements:
            for h in H.elements:
                expected = G.multiply(G.multiply(g, self.boundary[h]), G.inverse(g))
                if self.boundary[self.action[g][h]] != expected:
                    raise StructuralError(f"{self.name}: boundary is not equivariant at ({g}, {h})")
        for h in H.elements:
            for other in H.elements:
                expected = H.multiply(H.multiply(h, other), H.inverse(h))
                if self.action[self.boundary[h]][other] != expected:
                    raise StructuralError(f"{self.name}: Peiffer identity fails at ({h}, {other})")


def crossed_module_2group(module: CrossedModule) -> TableTwoGroupoid:
    """The one-object 2-groupoid of a crossed module.

    1-cells are elements of G; the 2-cell with id g·|H| + h goes g ⇒ ∂(h)g.
    Vertical composition multiplies in H; horizontal composition of
    (h, g) then (k, f) is (k·ᶠh, fg).
    """
    H, G, boundary, action = module.top, module.bottom, module.boundary, module.action
    width = H.order

    def cell(h: int, g: int) -> int:
        return g * width + h

    two_cells = {cell(h, g): (g, G.multiply(boundary[h], g)) for g in G.elements for h in H.elements}
    vcomp = {}
    hcomp = {}
    for g in G.elements:
        for h in H.elements:
            middle = G.multiply(boundary[h], g)
            for later in H.elements:
                vcomp[(cell(h, g), cell(later, middle))] = cell(H.multiply(later, h), g)
            for f in G.elements:
                for k in H.elements:
                    hcomp[(cell(h, g), cell(k, f))] = cell(H.multiply(k, action[f][h]), G.multiply(f, g))
    return TableTwoGroupoid(
        objects=[0],
        one_cells={g: (0, 0) for g in G.elements},
        id1={0: G.identity},
        comp1={(f, g): G.multiply(g, f) for f in G.elements for g in G.elements},
        two_cells=two_cells,
        id2={g: cell(H.identity, g) for g in G.elements},
        vcomp=vcomp,
        hcomp=hcomp,
        name=f"2grp({module.name})",
    )


# ---------------------------------------------------------------------------
# Indexed powers
# ---------------------------------------------------------------------------


class PowerTwoGroupoid(TwoGroupoid):
    """T^I: cells are tuples indexed by I, all structure component-wise.

    Powers are never tabulated; generators are single-coordinate changes, so
    searches over a power stay linear in |I|.
    """

    def __init__(self, base: TwoGroupoid, indices: Sequence[Hashable], name: str | None = None) -> None:
        self.base = base
        self.indices = tuple(indices)
        self.width = len(self.indices)
        self.name = name or f"{base.name}^{self.width}"

    def __repr__(self) -> str:
        return f"PowerTwoGroupoid({self.name})"

    @cached_property
    def _objects(self) -> list[tuple[Cell, ...]]:
        return list(product(self.base.objects(), repeat=self.width))

    def objects(self) -> Sequence[Cell]:
        return self._objects

    def one_cell_source(self, f: Cell) -> Cell:
        return tuple(self.base.one_cell_source(c) for c in f)

    def one_cell_target(self, f: Cell) -> Cell:
        return tuple(self.base.one_cell_target(c) for c in f)

    def hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        return list(product(*(self.base.hom1(a, b) for a, b in zip(x, y, strict=True))))

    def identity1(self, x: Cell) -> Cell:
        return tuple(self.base.identity1(c) for c in x)

    def compose1(self, f: Cell, g: Cell) -> Cell:
        return tuple(self.base.compose1(a, b) for a, b in zip(f, g, strict=True))

    def two_cell_source(self, a: Cell) -> Cell:
        return tuple(self.base.two_cell_source(c) for c in a)

    def two_cell_target(self, a: Cell) -> Cell:
        return tuple(self.base.two_cell_target(c) for c in a)

    def hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        return list(product(*(self.base.hom2(a, b) for a, b in zip(f, g, strict=True))))

    def identity2(self, f: Cell) -> Cell:
        return tuple(self.base.identity2(c) for c in f)

    def vertical_compose(self, a: Cell, b: Cell) -> Cell:
        return tuple(self.base.vertical_compose(p, q) for p, q in zip(a, b, strict=True))

    def horizontal_compose(self, a: Cell, b: Cell) -> Cell:
        return tuple(self.base.horizontal_compose(p, q) for p, q in zip(a, b, strict=True))

    def inverse1(self, f: Cell) -> Cell:
        return tuple(self.base.inverse1(c) for c in f)

    def vertical_inverse(self, a: Cell) -> Cell:
        return tuple(self.base.vertical_inverse(c) for c in a)

    def one_cells_from(self, x: Cell) -> Iterator[Cell]:
        return product(*(list(self.base.one_cells_from(c)) for c in x))

    def two_cells_from(self, f: Cell) -> Iterator[Cell]:
        return product(*(list(self.base.two_cells_from(c)) for c in f))

    def generating_one_cells_from(self, x: Cell) -> Iterator[Cell]:
        identity = self.identity1(x)
        yield identity
        for position, component in enumerate(x):
            unit = identity[position]
            for f in self.base.generating_one_cells_from(component):
                if f != unit:
                    yield identity[:position] + (f,) + identity[position + 1 :]

    def generating_two_cells_from(self, f: Cell) -> Iterator[Cell]:
        identity = self.identity2(f)
        yield identity
        for position, component in enumerate(f):
            unit = identity[position]
            for a in self.base.generating_two_cells_from(component):
                if a != unit:
                    yield identity[:position] + (a,) + identity[position + 1 :]

    def local_hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        return _local_cells(x, y, self.identity1(x), self.base.hom1)

    def local_hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        if self.one_cell_source(f) != self.one_cell_source(g) or self.one_cell_target(f) != self.one_cell_target(g):
            return []
        return _local_cells(f, g, self.identity2(f), self.base.hom2)


def _local_cells(
    source: Cell, target: Cell, identity: tuple[Cell, ...], base_hom: Callable[[Cell, Cell], Sequence[Cell]]
) -> list[Cell]:
    """Cells source → target equal to `identity` off one coordinate."""
    differing = [i for i, (s, t) in enumerate(zip(source, target, strict=True)) if s != t]
    if len(differing) > 1:
        return []
    positions = differing or range(len(source))
    cells: dict[Cell, None] = {} if differing else {identity: None}
    for position in positions:
        for cell in base_hom(source[position], target[position]):
            cells[identity[:position] + (cell,) + identity[position + 1 :]] = None
    return list(cells)


class ReindexFunctor(TwoFunctor):
    """(F x)_τ = x_{positions[τ]}: a projection/diagonal between powers of one base."""

    def __init__(self, source: PowerTwoGroupoid, target: PowerTwoGroupoid, positions: Sequence[int], name: str = "r") -> None:
        if source.base is not target.base:
            raise StructuralError(f"reindexing {name} joins powers of different bases")
        if len(positions) != target.width or any(not 0 <= p < source.width for p in positions):
            raise StructuralError(f"reindexing {name} has positions outside the source index set")
        self.source = source
        self.target = target
        self.positions = tuple(positions)
        self.name = name

    def _reindex(self, cell: Cell) -> Cell:
        return tuple(cell[p] for p in self.positions)

    def on_object(self, x: Cell) -> Cell:
        return self._reindex(x)

    def on_one_cell(self, f: Cell) -> Cell:
        return self._reindex(f)

    def on_two_cell(self, a: Cell) -> Cell:
        return self._reindex(a)


class PowerFunctor(TwoFunctor):
    """F^I: applies a base functor in every coordinate."""

    def __init__(self, source: PowerTwoGroupoid, target: PowerTwoGroupoid, base_functor: TwoFunctor) -> None:
        if source.width != target.width:
            raise StructuralError(f"power functor between widths {source.width} and {target.width}")
        self.source = source
        self.target = target
        self.base_functor = base_functor
        self.name = f"{base_functor.name}^{source.width}"
        self.componentwise = (base_functor, source.width)

    def on_object(self, x: Cell) -> Cell:
        return tuple(self.base_functor.on_object(c) for c in x)

    def on_one_cell(self, f: Cell) -> Cell:
        return tuple(self.base_functor.on_one_cell(c) for c in f)

    def on_two_cell(self, a: Cell) -> Cell:
        return tuple(self.base_functor.on_two_cell(c) for c in a)


# ---------------------------------------------------------------------------
# Covers and the Čech construction
# ---------------------------------------------------------------------------


class CoverComplex:
    """A cover nerve: vertices (the opens) and a downward-closed family of simplices.

    Raises:
        StructuralError: If the family is not downward closed, has an empty
            simplex, or misses a singleton.
    """

    def __init__(self, vertices: Sequence[str], simplices: Sequence[Sequence[str]], name: str = "K") -> None:
        self.vertices = tuple(vertices)
        self.simplices = frozenset(frozenset(s) for s in simplices)
        self.name = name
        known = set(self.vertices)
        for simplex in self.simplices:
            if not simplex:
                raise StructuralError(f"{name}: empty simplex")
            if not simplex <= known:
                raise StructuralError(f"{name}: simplex {sorted(simplex)} uses unknown vertices")
            for size in range(1, len(simplex)):
                for face in combinations(sorted(simplex), size):
                    if frozenset(face) not in self.simplices:
                        raise StructuralError(f"{name}: face {list(face)} of {sorted(simplex)} is missing")
        for vertex in self.vertices:
            if frozenset([vertex]) not in self.simplices:
                raise StructuralError(f"{name}: vertex {vertex} has no singleton simplex")

    @classmethod
    def from_maximal(cls, maximal: Sequence[Sequence[str]], name: str = "K") -> "CoverComplex":
        """The downward closure of the given simplices; vertices in order of appearance."""
        vertices: list[str] = []
        for simplex in maximal:
            for vertex in simplex:
                if vertex not in vertices:
                    vertices.append(vertex)
        closure = {
            frozenset(face) for simplex in maximal for size in range(1, len(simplex) + 1) for face in combinations(simplex, size)
        }
        return cls(vertices, [sorted(s) for s in closure], name=name)

    def __repr__(self) -> str:
        return f"CoverComplex({self.name}, f-vector={self.f_vector()})"

    def f_vector(self) -> tuple[int, ...]:
        dimension = max(len(s) for s in self.simplices)
        return tuple(sum(1 for s in self.simplices if len(s) == k + 1) for k in range(dimension))

    def is_simplex(self, vertices: Sequence[str]) -> bool:
        return frozenset(vertices) in self.simplices


def cover_from_text(text: str, name: str = "K") -> CoverComplex:
    """Parses one maximal simplex per line as space-separated vertex names.

    Raises:
        DocumentError: On a line repeating a vertex, or when no simplex is given.
    """
    maximal = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        vertices = line.split()
        if len(set(vertices)) != len(vertices):
            raise DocumentError(f"line {number}", f"repeated vertex in {line!r}")
        maximal.append(vertices)
    if not maximal:
        raise DocumentError("line 1", "cover document lists no simplex")
    return CoverComplex.from_maximal(maximal, name=name)


# the 6-vertex triangulation of the real projective plane
_RP2_TRIANGLES = ["1 2 4", "1 2 6", "1 3 5", "1 3 6", "1 4 5", "2 3 4", "2 3 5", "2 5 6", "3 4 6", "4 5 6"]


def standard_covers() -> dict[str, CoverComplex]:
    return {
        "point": CoverComplex.from_maximal([["0"]], name="point"),
        "interval": CoverComplex.from_maximal([["0", "1"]], name="interval"),
        "circle": CoverComplex.from_maximal([["0", "1"], ["1", "2"], ["0", "2"]], name="circle"),
        "sphere": CoverComplex.from_maximal([list(face) for face in combinations("0123", 3)], name="sphere"),
        "rp2": CoverComplex.from_maximal([t.split() for t in _RP2_TRIANGLES], name="rp2"),
    }


class Indexing(str, Enum):
    """Which tuples of opens index a Čech level."""

    ORDERED = "ordered"  # every tuple, repeats allowed, whose support is a simplex
    INCREASING = "increasing"  # strictly increasing tuples spanning a simplex


def cech_index_sets(cover: CoverComplex, indexing: Indexing = Indexing.ORDERED) -> list[list[tuple[str, ...]]]:
    """Index tuples for degrees 0..3, in lexicographic order of vertex positions."""
    vertices = cover.vertices
    levels = []
    for n in range(TOP_DEGREE + 1):
        if indexing is Indexing.ORDERED:
            candidates = product(vertices, repeat=n + 1)
        else:
            candidates = combinations(vertices, n + 1)
        levels.append([tuple(t) for t in candidates if cover.is_simplex(t)])
    return levels


def cech_cosimplicial(
    cover: CoverComplex, coefficients: TwoGroupoid, indexing: Indexing = Indexing.ORDERED
) -> RestrictedCosimplicial2Groupoid:
    """Gⁿ = T^{Iₙ}; the coface d^i reindexes by deleting entry i of each tuple."""
    indexing = Indexing(indexing)
    index_sets = cech_index_sets(cover, indexing)
    levels = [
        PowerTwoGroupoid(coefficients, index_set, name=f"{coefficients.name}^{cover.name}{n}")
        for n, index_set in enumerate(index_sets)
    ]
    cofaces = {}
    for n in range(1, TOP_DEGREE + 1):
        position = {tau: p for p, tau in enumerate(index_sets[n - 1])}
        for i in range(n + 1):
            positions = [position[tau[:i] + tau[i + 1 :]] for tau in index_sets[n]]
            cofaces[(n, i)] = ReindexFunctor(levels[n - 1], levels[n], positions, name=f"d{i}@{n}")
    name = f"cech({cover.name},{coefficients.name},{indexing.value})"
    logger.info(f"[cech_cosimplicial] {name}: widths {[len(s) for s in index_sets]}")
    return RestrictedCosimplicial2Groupoid(levels, cofaces, name=name)


def cech_levelwise_map(
    source: RestrictedCosimplicial2Groupoid, target: RestrictedCosimplicial2Groupoid, base_functor: TwoFunctor
) -> LevelwiseMap:
    """The map of Čech objects over one cover induced by a map of coefficients."""
    components = [PowerFunctor(source.level(n), target.level(n), base_functor) for n in range(TOP_DEGREE + 1)]
    return LevelwiseMap(source, target, components, name=f"cech({base_functor.name})")


# ---------------------------------------------------------------------------
# The abelian oracle
# ---------------------------------------------------------------------------


def _cyclic_coordinates(group: FiniteGroup) -> tuple[int, list[int]]:
    """Order n of a cyclic group and the powers of one generator."""
    n = group.order
    generator = next((g for g in group.elements if group.element_order(g) == n), None)
    if generator is None:
        raise StructuralError(f"coefficient group {group.name} is not cyclic")
    powers = [group.identity]
    for _ in range(n - 1):
        powers.append(group.multiply(powers[-1], generator))
    return n, powers


def invariant_factors(matrix: np.ndarray) -> list[int]:
    """Non-zero diagonal entries of the Smith normal form over ℤ."""
    rows, cols = matrix.shape
    if rows == 0 or cols == 0 or not matrix.any():
        return []
    normal = smith_normal_form(Matrix(matrix.tolist()), domain=ZZ)
    return [abs(int(normal[i, i])) for i in range(min(rows, cols)) if normal[i, i] != 0]


def kernel_order(matrix: np.ndarray, modulus: int) -> int:
    """|ker M| for M acting on (ℤ/n)^cols."""
    factors = invariant_factors(matrix)
    return modulus ** (matrix.shape[1] - len(factors)) * prod(gcd(d, modulus) for d in factors)


@dataclass
class AbelianCochainComplex:
    """The alternating-sum cochain complex of a Čech object with coefficients
    B²A (2-cells of the identity) or BA (1-cells of the object), A cyclic.
    """

    cosimplicial: RestrictedCosimplicial2Groupoid
    mode: str
    modulus: int
    cells: list[Cell]
    ranks: tuple[int, ...]
    cofaces: dict[tuple[int, int], np.ndarray] = field(repr=False)

    @property
    def cell_dimension(self) -> int:
        return 2 if self.mode == "B2A" else 1

    @property
    def class_degree(self) -> int:
        """Degree whose cohomology classifies descent data."""
        return 2 if self.mode == "B2A" else 1

    def delta(self, k: int) -> np.ndarray:
        """δᵏ = Σ (−1)^i d^i: Cᵏ → Cᵏ⁺¹ as an integer matrix."""
        if k < 0:
            return np.zeros((self.ranks[0], 0), dtype=np.int64)
        total = np.zeros((self.ranks[k + 1], self.ranks[k]), dtype=np.int64)
        for i in range(k + 2):
            total += (-1) ** i * self.cofaces[(k + 1, i)]
        return total

    def cocycle_order(self, k: int) -> int:
        return kernel_order(self.delta(k), self.modulus)

    def coboundary_order(self, k: int) -> int:
        if k == 0:
            return 1
        return self.modulus ** self.ranks[k - 1] // kernel_order(self.delta(k - 1), self.modulus)

    def cohomology_order(self, k: int) -> int:
        return self.cocycle_order(k) // self.coboundary_order(k)

    def to_cochain(self, cell: Sequence[Cell]) -> tuple[int, ...]:
        residue = {c: r for r, c in enumerate(self.cells)}
        return tuple(residue[c] for c in cell)

    def to_cell(self, cochain: Sequence[int]) -> tuple[Cell, ...]:
        return tuple(self.cells[r % self.modulus] for r in cochain)

    def coboundary(self, k: int, cochain: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(v) for v in (self.delta(k) @ np.asarray(cochain, dtype=np.int64)) % self.modulus)

    def is_cocycle(self, k: int, cochain: Sequence[int]) -> bool:
        return not any(self.coboundary(k, cochain))

    def representatives(self, k: int, budget: SearchBudget | int | None = None) -> list[tuple[int, ...]]:
        """Least cocycle of every class of Hᵏ, in lexicographic order.

        Raises:
            BudgetExceededError: If the cochain group exceeds `budget`.
        """
        budget = ensure_budget(budget, "oracle_representatives")
        delta = self.delta(k)
        boundaries = self.delta(k - 1).T % self.modulus if k > 0 else np.zeros((0, self.ranks[k]), dtype=np.int64)
        cocycles = []
        for cochain in product(range(self.modulus), repeat=self.ranks[k]):
            budget.spend()
            vector = np.asarray(cochain, dtype=np.int64)
            if not ((delta @ vector) % self.modulus).any():
                cocycles.append(cochain)
        uf = UnionFind(cocycles)
        for cochain in cocycles:
            vector = np.asarray(cochain, dtype=np.int64)
            for column in boundaries:
                budget.spend()
                uf.union(cochain, tuple(int(v) for v in (vector + column) % self.modulus))
        return [members[0] for members in uf.classes()]


def abelian_cochain_complex(cosimplicial: RestrictedCosimplicial2Groupoid) -> AbelianCochainComplex:
    """Integer coface matrices of a Čech object with cyclic abelian coefficients.

    Raises:
        StructuralError: If some level is not a power of one B²A or BA, A cyclic.
    """
    C = cosimplicial
    bases = {id(getattr(level, "base", None)) for level in C.levels}
    base = getattr(C.level(0), "base", None)
    if base is None or len(bases) != 1:
        raise StructuralError(f"{C.name}: levels are not powers of one coefficient 2-groupoid")
    if len(base.objects()) != 1:
        raise StructuralError(f"{C.name}: coefficients have more than one object")
    (x,) = base.objects()
    loops = list(base.hom1(x, x))
    unit = base.identity1(x)
    spheres = list(base.hom2(unit, unit))
    if len(loops) == 1 and len(spheres) >= 1:
        mode, cells = "B2A", spheres
        multiply = base.vertical_compose
    elif all(len(base.hom2(f, f)) == 1 for f in loops):
        mode, cells = "BA", loops
        multiply = base.compose1
    else:
        raise StructuralError(f"{C.name}: coefficients are neither B2A nor BA")
    position = {c: p for p, c in enumerate(cells)}
    group = FiniteGroup([[position[multiply(a, b)] for b in cells] for a in cells], name=f"A({base.name})")
    if not group.is_abelian():
        raise StructuralError(f"{C.name}: coefficient group is not abelian")
    modulus, powers = _cyclic_coordinates(group)
    ordered_cells = [cells[p] for p in powers]
    residue = {c: r for r, c in enumerate(ordered_cells)}
    dimension = 2 if mode == "B2A" else 1
    unit_cell = ordered_cells[0]
    generator_cell = ordered_cells[1 % modulus]

    ranks = tuple(level.width for level in C.levels)
    matrices = {}
    for (n, i), functor in C.cofaces.items():
        matrix = np.zeros((ranks[n], ranks[n - 1]), dtype=np.int64)
        for column in range(ranks[n - 1]):
            basis = tuple(generator_cell if p == column else unit_cell for p in range(ranks[n - 1]))
            image = apply_functor(functor, dimension, basis)
            matrix[:, column] = [residue[c] for c in image]
        matrices[(n, i)] = matrix
    return AbelianCochainComplex(C, mode, modulus, ordered_cells, ranks, matrices)


@dataclass
class CohomologyReport:
    name: str
    mode: str
    modulus: int
    ranks: tuple[int, ...]
    orders: tuple[int, int, int]
    representatives: list[tuple[int, ...]] | None

    @property
    def descent_class_count(self) -> int:
        """|H²| for B²A coefficients, |H¹| for BA coefficients."""
        return self.orders[2] if self.mode == "B2A" else self.orders[1]

    def summary(self) -> str:
        h0, h1, h2 = self.orders
        return f"{self.name}: mode {self.mode} mod {self.modulus}, ranks {self.ranks}, |H0|={h0} |H1|={h1} |H2|={h2}"


def abelian_cohomology_oracle(
    cosimplicial: RestrictedCosimplicial2Groupoid, budget: SearchBudget | int | None = None
) -> CohomologyReport:
    """|H⁰|, |H¹|, |H²| of the alternating coface complex, by Smith normal form.

    Class representatives are listed when the classifying cochain group fits
    in `budget`, and are None otherwise.
    """
    budget = ensure_budget(budget, "abelian_cohomology_oracle")
    complex_ = abelian_cochain_complex(cosimplicial)
    orders = tuple(complex_.cohomology_order(k) for k in range(3))
    degree = complex_.class_degree
    representatives = None
    if complex_.modulus ** complex_.ranks[degree] <= budget.remaining:
        representatives = complex_.representatives(degree, budget)
    report = CohomologyReport(cosimplicial.name, complex_.mode, complex_.modulus, complex_.ranks, orders, representatives)  # type: ignore[arg-type]
    logger.info(f"[abelian_cohomology_oracle] {report.summary()}")
    return report
