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

"""Direct enumeration of the restricted totalization Tot_r of level-wise nerves,
and its comparison with the nerve of the descent 2-groupoid.

A k-simplex of Tot_r(X•) is a family of simplicial maps φₙ: Δⁿ×Δᵏ → Xⁿ,
n = 0..3, with Xⁿ(d^i)∘φₙ₋₁ = φₙ∘(δ_i × id). The levels are 3-coskeletal, so
φₙ is determined by its values on the strictly increasing chains of at most
four vertices of [n]×[k]. Those values are found by backtracking: a chain
missing some first coordinate is forced by the lower level, the others are
filled from the boundary already chosen.
"""

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import StructuralError
from app.app_utils.search import backtrack_assignments
from app.app_utils.union_find import UnionFind
from app.tools.cosimplicial import (
    TOP_DEGREE,
    RestrictedCosimplicial2Groupoid,
    RestrictedCosimplicialSSet,
    levelwise_nerve,
)
from app.tools.descent import (
    DescentCell2,
    DescentDatum,
    DescentTwoGroupoid,
    GaugeTransformation,
    coface,
    descent_2groupoid,
    gauge_classes,
)
from app.tools.nerve import NerveTriangle, TwoNerve, triangle_is_typed
from app.tools.simplicial_set import Simplex

logger = logging.getLogger(__name__)

Vertex = tuple[int, int]
Chain = tuple[Vertex, ...]

MAX_TOT_DIMENSION = 2


@lru_cache(maxsize=None)
def prism_chains(n: int, k: int) -> tuple[Chain, ...]:
    """Strictly increasing chains of 1 to 4 vertices of [n]×[k], by (length, lex)."""
    vertices = [(p, q) for p in range(n + 1) for q in range(k + 1)]
    chains: list[Chain] = []

    def extend(chain: Chain) -> None:
        chains.append(chain)
        if len(chain) == 4:
            return
        p, q = chain[-1]
        for vertex in vertices:
            if vertex != (p, q) and vertex[0] >= p and vertex[1] >= q:
                extend(chain + (vertex,))

    for vertex in vertices:
        extend((vertex,))
    return tuple(sorted(chains, key=lambda chain: (len(chain), chain)))


@lru_cache(maxsize=None)
def _chain_index(n: int, k: int) -> dict[Chain, int]:
    return {chain: position for position, chain in enumerate(prism_chains(n, k))}


def _faces(chain: Chain) -> list[Chain]:
    if len(chain) == 1:
        return []
    return [chain[:i] + chain[i + 1 :] for i in range(len(chain))]


def _along_coface(chain: Chain, j: int) -> Chain:
    """Image of a chain of [n]×[k-1] under id × δ_j."""
    return tuple((p, q if q < j else q + 1) for p, q in chain)


@dataclass(frozen=True)
class TotSimplex:
    """A k-simplex of Tot_r: `values[n]` lists φₙ on `prism_chains(n, k)`."""

    k: int
    values: tuple[tuple[Simplex, ...], ...]

    def value(self, n: int, chain: Chain) -> Simplex:
        return self.values[n][_chain_index(n, self.k)[chain]]

    def face(self, j: int) -> "TotSimplex":
        """Restriction along id × δ_j."""
        return TotSimplex(
            self.k - 1,
            tuple(
                tuple(self.value(n, _along_coface(chain, j)) for chain in prism_chains(n, self.k - 1))
                for n in range(TOP_DEGREE + 1)
            ),
        )

    def as_seed(self, j: int | None = None) -> dict[tuple[int, Chain], Simplex]:
        """Values keyed by (n, chain); with `j`, pushed forward as the j-th face of a (k+1)-simplex."""
        return {
            (n, chain if j is None else _along_coface(chain, j)): self.value(n, chain)
            for n in range(TOP_DEGREE + 1)
            for chain in prism_chains(n, self.k)
        }


def tot_degeneracy(X: RestrictedCosimplicialSSet, simplex: TotSimplex, j: int) -> TotSimplex:
    """Restriction along id × σ_j; collapsed chains are rebuilt by degeneracies."""
    k = simplex.k + 1
    values = []
    for n in range(TOP_DEGREE + 1):
        level = X.level(n)
        row = []
        for chain in prism_chains(n, k):
            image = [(p, q if q <= j else q - 1) for p, q in chain]
            deduplicated = tuple(v for position, v in enumerate(image) if position == 0 or v != image[position - 1])
            value = simplex.value(n, deduplicated)
            dimension = len(deduplicated) - 1
            for position in range(1, len(image)):
                if image[position] == image[position - 1]:
                    value = level.degeneracy(dimension, position - 1, value)
                    dimension += 1
            row.append(value)
        values.append(tuple(row))
    return TotSimplex(k, tuple(values))


# ---------------------------------------------------------------------------
# Backtracking plan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Slot:
    n: int
    chain: Chain
    mode: str  # forced | fill | horn | diagonal | lower
    via: tuple = ()  # type: ignore[type-arg]


def _normal_mode(n: int, chain: Chain, normal: bool) -> str:
    if normal and n == 1:
        if len(chain) == 2 and chain[0][0] == 0 and chain[1][0] == 1 and chain[0][1] < chain[1][1]:
            return "diagonal"
        if (
            len(chain) == 3
            and [p for p, _ in chain] == [0, 1, 1]
            and chain[0][1] == chain[1][1] < chain[2][1]
        ):
            return "lower"
    return "fill"


@lru_cache(maxsize=None)
def _plan(k: int, normal: bool) -> tuple[_Slot, ...]:
    """Assignment order: forced chains first, then free chains with each
    tetrahedron placed as soon as its faces are, and a triangle that is the last
    missing face of a tetrahedron solved from that horn."""
    slots: list[_Slot] = []
    for n in range(TOP_DEGREE + 1):
        placed: set[Chain] = set()
        pending = []
        for chain in prism_chains(n, k):
            covered = {p for p, _ in chain}
            missing = [i for i in range(n + 1) if i not in covered]
            if missing:
                via = tuple((i, tuple((p if p < i else p - 1, q) for p, q in chain)) for i in missing)
                slots.append(_Slot(n, chain, "forced", via))
                placed.add(chain)
            else:
                pending.append(chain)
        while pending:
            slot = None
            ready = [c for c in pending if len(c) == 4 and all(f in placed for f in _faces(c))]
            if ready:
                slot = _Slot(n, ready[0], "fill")
            if slot is None:
                for tetrahedron in (c for c in pending if len(c) == 4):
                    open_faces = [i for i, f in enumerate(_faces(tetrahedron)) if f not in placed]
                    if len(open_faces) == 1:
                        face = _faces(tetrahedron)[open_faces[0]]
                        if _normal_mode(n, face, normal) == "fill":
                            slot = _Slot(n, face, "horn", (tetrahedron, open_faces[0]))
                            break
            if slot is None:
                chain = next(c for c in pending if all(f in placed for f in _faces(c)))
                slot = _Slot(n, chain, _normal_mode(n, chain, normal))
            slots.append(slot)
            placed.add(slot.chain)
            pending.remove(slot.chain)
    return tuple(slots)


def _check_degree(k: int) -> None:
    if not 0 <= k <= MAX_TOT_DIMENSION:
        raise ValueError(f"Tot_r simplices are enumerated in dimensions 0..{MAX_TOT_DIMENSION}, got {k}")


def _is_local_slot(n: int, chain: Chain) -> bool:
    if n == 0:
        return len(chain) == 2
    return n == 1 and [p for p, _ in chain] == [0, 0, 1]


def _local_fillers(level: TwoNerve, boundary: Sequence[Simplex]) -> list[Simplex]:
    G = level.groupoid
    if len(boundary) == 2:
        target, source = boundary
        return list(G.local_hom1(source, target))
    g12, g02, g01 = boundary
    if G.one_cell_target(g01) != G.one_cell_source(g12):
        return []
    if (G.one_cell_source(g02), G.one_cell_target(g02)) != (G.one_cell_source(g01), G.one_cell_target(g12)):
        return []
    return [NerveTriangle(g01, g02, g12, a) for a in G.local_hom2(g02, G.compose1(g01, g12))]


def iter_tot(
    X: RestrictedCosimplicialSSet,
    k: int,
    budget: SearchBudget | int | None = None,
    normal_only: bool = False,
    seed: Mapping[tuple[int, Chain], Simplex] | None = None,
    local: bool = False,
) -> Iterator[TotSimplex]:
    """Yields the k-simplices of Tot_r(X•) in backtracking order.

    Args:
        X: Level-wise 3-coskeletal restricted cosimplicial simplicial set.
        k: Simplex dimension, 0..2.
        budget: Node budget shared by the whole search.
        normal_only: Restrict to normal simplices: over n = 1 every diagonal
            (0,j)→(1,j′) is the composite through (1,j) and the triangle
            (0,j),(1,j),(1,j′) carries an identity 2-cell. Needs 2-nerve levels.
        seed: Values fixed in advance, keyed by (n, chain).
        local: For k = 1 only: the edge over n = 0 and the triangle
            (0,0),(0,1),(1,1) over n = 1 take values that are identities away
            from one coordinate of the level (see `TwoGroupoid.local_hom1`).

    Raises:
        BudgetExceededError: If more than `budget` candidate values are tried.
    """
    _check_degree(k)
    budget = ensure_budget(budget, "tot_r_direct")
    if local and k != 1:
        raise ValueError(f"local Tot_r simplices are enumerated in dimension 1, got {k}")
    seed = dict(seed or {})
    if (normal_only or local) and not all(isinstance(X.level(n), TwoNerve) for n in (0, 1)):
        raise StructuralError(f"{X.name}: normal and local Tot_r simplices need 2-nerve levels")
    slots = _plan(k, normal_only)

    def value_of(assignment: dict, n: int, chain: Chain) -> Simplex:  # type: ignore[type-arg]
        return assignment[(n, chain)]

    def computed(assignment: dict, slot: _Slot) -> list[Simplex] | None:  # type: ignore[type-arg]
        """Values fixed by the slot's rule, or None for a free fill."""
        n, chain = slot.n, slot.chain
        dimension = len(chain) - 1
        if slot.mode == "forced":
            images = {X.coface(n, i)(dimension, value_of(assignment, n - 1, lower)) for i, lower in slot.via}
            return list(images) if len(images) == 1 else []
        if slot.mode == "horn":
            tetrahedron, missing = slot.via
            horn = [None if i == missing else value_of(assignment, n, f) for i, f in enumerate(_faces(tetrahedron))]
            return [X.level(n).face(3, missing, t) for t in X.level(n).horn_fillers(3, missing, horn)]
        if slot.mode in ("diagonal", "lower"):
            G = X.level(1).groupoid
            (p0, q0), (p1, q1) = chain[0], chain[-1]
            lower_edge = value_of(assignment, 1, ((0, q0), (1, q0)))
            vertical = value_of(assignment, 1, ((1, q0), (1, q1)))
            composite = G.compose1(lower_edge, vertical)
            if slot.mode == "diagonal":
                return [composite]
            return [NerveTriangle(lower_edge, composite, vertical, G.identity2(composite))]
        return None

    def candidates(assignment: dict, key: tuple[int, Chain]) -> Sequence[Simplex]:  # type: ignore[type-arg]
        slot = slot_of[key]
        n, chain = key
        dimension = len(chain) - 1
        fixed = computed(assignment, slot)
        boundary = [value_of(assignment, n, f) for f in _faces(chain)]
        if key in seed:
            value = seed[key]
            if fixed is not None:
                return [value] if value in fixed else []
            return [value] if X.level(n).is_filler(dimension, boundary, value) else []
        if fixed is not None:
            return fixed
        if local and _is_local_slot(n, chain):
            return _local_fillers(X.level(n), boundary)
        return X.level(n).fillers(dimension, boundary)

    def accept(assignment: dict, key: tuple[int, Chain]) -> bool:  # type: ignore[type-arg]
        n, chain = key
        if len(chain) == 1:
            return True
        level, value = X.level(n), assignment[key]
        if slot_of[key].mode == "lower" and not triangle_is_typed(level.groupoid, value):
            return False
        return all(level.face(len(chain) - 1, i, value) == assignment[(n, f)] for i, f in enumerate(_faces(chain)))

    slot_of = {(slot.n, slot.chain): slot for slot in slots}
    variables = [(slot.n, slot.chain) for slot in slots]
    for assignment in backtrack_assignments(variables, candidates, accept, budget):
        yield TotSimplex(
            k,
            tuple(tuple(assignment[(n, chain)] for chain in prism_chains(n, k)) for n in range(TOP_DEGREE + 1)),
        )


def tot_r_direct(
    X: RestrictedCosimplicialSSet,
    k: int,
    budget: SearchBudget | int | None = None,
    normal_only: bool = False,
    seed: Mapping[tuple[int, Chain], Simplex] | None = None,
) -> list[TotSimplex]:
    """All k-simplices of Tot_r(X•); see `iter_tot`."""
    simplices = list(iter_tot(X, k, budget, normal_only, seed))
    logger.debug(f"[tot_r_direct] {X.name} k={k} normal={normal_only}: {len(simplices)} simplices")
    return simplices


def _complete(X: RestrictedCosimplicialSSet, k: int, seed: Mapping[tuple[int, Chain], Simplex], budget: SearchBudget) -> TotSimplex:
    completions = list(iter_tot(X, k, budget, normal_only=True, seed=seed))
    if len(completions) != 1:
        raise RuntimeError(f"[tot_r_direct] seeded {k}-simplex has {len(completions)} normal completions, expected 1")
    return completions[0]


# ---------------------------------------------------------------------------
# Conversions between Tot_r and the nerve of Desc
# ---------------------------------------------------------------------------


def path_to_gauge(C: RestrictedCosimplicial2Groupoid, path: TotSimplex) -> GaugeTransformation:
    """Composes the two 2-cells of the square over n = 1 into c.

    With T₁ the triangle (0,0),(1,0),(1,1) and T₂ the triangle
    (0,0),(0,1),(1,1), c = T₁⁻¹ * T₂.
    """
    G1 = C.level(1)
    lower = path.value(1, ((0, 0), (1, 0), (1, 1)))
    upper = path.value(1, ((0, 0), (0, 1), (1, 1)))
    return GaugeTransformation(
        vertex_to_datum(path.face(1)),
        vertex_to_datum(path.face(0)),
        path.value(0, ((0, 0), (0, 1))),
        G1.vertical_compose(G1.vertical_inverse(lower.a), upper.a),
    )


def vertex_to_datum(vertex: TotSimplex) -> DescentDatum:
    return DescentDatum(
        vertex.value(0, ((0, 0),)),
        vertex.value(1, ((0, 0), (1, 0))),
        vertex.value(2, ((0, 0), (1, 0), (2, 0))).a,
    )


def tot_to_nerve(C: RestrictedCosimplicial2Groupoid, desc: DescentTwoGroupoid, simplex: TotSimplex) -> Simplex:
    """The filler-composition map Tot_r → N(Desc) in dimensions 0..2."""
    if simplex.k == 0:
        return vertex_to_datum(simplex)
    if simplex.k == 1:
        return path_to_gauge(C, simplex)
    g01, g02, g12 = (path_to_gauge(C, simplex.face(j)) for j in (2, 1, 0))
    m = simplex.value(0, ((0, 0), (0, 1), (0, 2))).a
    return NerveTriangle(g01, g02, g12, DescentCell2(g02, desc.compose1(g01, g12), m))


def datum_to_vertex(
    C: RestrictedCosimplicial2Groupoid,
    X: RestrictedCosimplicialSSet,
    datum: DescentDatum,
    budget: SearchBudget | int | None = None,
) -> TotSimplex:
    budget = ensure_budget(budget, "datum_to_vertex")
    g = datum.g
    triangle = NerveTriangle(coface(C, 2, 2, 1, g), coface(C, 2, 1, 1, g), coface(C, 2, 0, 1, g), datum.a)
    seed = {(0, ((0, 0),)): datum.x, (1, ((0, 0), (1, 0))): g, (2, ((0, 0), (1, 0), (2, 0))): triangle}
    return _complete(X, 0, seed, budget)


def gauge_to_path(
    C: RestrictedCosimplicial2Groupoid,
    X: RestrictedCosimplicialSSet,
    gauge: GaugeTransformation,
    budget: SearchBudget | int | None = None,
) -> TotSimplex:
    """The normal path of a gauge transformation.

    The square over n = 1 gets the diagonal d⁰f∘g with an identity in its lower
    triangle and c in its upper triangle; everything else is completed.

    Raises:
        RuntimeError: If the completion is not unique, i.e. (f, c) is not a gauge.
    """
    budget = ensure_budget(budget, "gauge_to_path")
    G1 = C.level(1)
    diagonal = G1.compose1(gauge.source.g, coface(C, 1, 0, 1, gauge.f))
    seed = datum_to_vertex(C, X, gauge.source, budget).as_seed(1)
    seed.update(datum_to_vertex(C, X, gauge.target, budget).as_seed(0))
    seed[(0, ((0, 0), (0, 1)))] = gauge.f
    seed[(1, ((0, 0), (0, 1), (1, 1)))] = NerveTriangle(coface(C, 1, 1, 1, gauge.f), diagonal, gauge.target.g, gauge.c)
    return _complete(X, 1, seed, budget)


def nerve_to_tot(
    C: RestrictedCosimplicial2Groupoid,
    X: RestrictedCosimplicialSSet,
    simplex: Simplex,
    k: int,
    budget: SearchBudget | int | None = None,
) -> TotSimplex:
    """The normal-form section N(Desc) → Tot_r in dimensions 0..2."""
    _check_degree(k)
    budget = ensure_budget(budget, "nerve_to_tot")
    if k == 0:
        return datum_to_vertex(C, X, simplex, budget)
    if k == 1:
        return gauge_to_path(C, X, simplex, budget)
    seed = {}
    for j, gauge in ((0, simplex.g12), (1, simplex.g02), (2, simplex.g01)):
        seed.update(gauge_to_path(C, X, gauge, budget).as_seed(j))
    seed[(0, ((0, 0), (0, 1), (0, 2)))] = NerveTriangle(simplex.g01.f, simplex.g02.f, simplex.g12.f, simplex.a.m)
    return _complete(X, 2, seed, budget)


def _nerve_face(simplex: Simplex, k: int, j: int) -> Simplex:
    if k == 1:
        return simplex.target if j == 0 else simplex.source
    return (simplex.g12, simplex.g02, simplex.g01)[j]


def desc_nerve_simplices(desc: DescentTwoGroupoid, k: int) -> list[Simplex]:
    """k-simplices of N(Desc) for k ≤ 2, triangles found through 2-cells out of composites."""
    _check_degree(k)
    if k == 0:
        return list(desc.objects())
    if k == 1:
        return list(desc.one_cells())
    triangles = []
    for first in desc.one_cells():
        for second in desc.one_cells_from(first.target):
            composite = desc.compose1(first, second)
            for cell in desc.two_cells_from(composite):
                inverse = desc.vertical_inverse(cell)
                triangles.append(NerveTriangle(first, cell.target, second, inverse))
    return triangles


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------


@dataclass
class DimensionComparison:
    k: int
    nerve_count: int
    tot_count: int
    normal_count: int
    passed: bool
    details: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return f"k={self.k}: N(Desc)={self.nerve_count} Tot_r={self.tot_count} normal={self.normal_count} {verdict}"


@dataclass
class ComparisonReport:
    name: str
    rows: list[DimensionComparison]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def summary(self) -> str:
        return "\n".join([f"{self.name}: {'pass' if self.passed else 'FAIL'}"] + [row.summary() for row in self.rows])


def compare_nerve_tot(
    C: RestrictedCosimplicial2Groupoid,
    dims: Sequence[int] = (0, 1),
    budget: SearchBudget | int | None = None,
    full: bool = False,
) -> ComparisonReport:
    """Compares N(Desc(G•)) with Tot_r(rN G•) in the requested dimensions.

    k = 0: the vertex map is a bijection onto the descent data. k ≥ 1: the
    normal-form section ι is a bijection onto the normal k-simplices, κ∘ι = id
    and κ commutes with faces; with `full`, every k-simplex of Tot_r is
    enumerated and κ is checked to be well defined and surjective.

    Raises:
        BudgetExceededError: If an enumeration exceeds `budget`.
    """
    budget = ensure_budget(budget, "compare_nerve_tot")
    X = levelwise_nerve(C)
    desc = descent_2groupoid(C, budget)
    rows = []
    for k in sorted(set(dims)):
        _check_degree(k)
        nerve = desc_nerve_simplices(desc, k)
        nerve_set = set(nerve)
        details = []
        if k == 0:
            tot = tot_r_direct(X, 0, budget)
            images = [vertex_to_datum(t) for t in tot]
            if len(set(images)) != len(images) or set(images) != nerve_set:
                details.append(f"vertices: {len(set(images))} distinct images of {len(tot)} onto {len(nerve)} data")
            rows.append(DimensionComparison(0, len(nerve), len(tot), len(tot), not details, details))
            continue
        normal = tot_r_direct(X, k, budget, normal_only=True)
        sections = {}
        for simplex in nerve:
            image = nerve_to_tot(C, X, simplex, k, budget)
            sections[simplex] = image
            if tot_to_nerve(C, desc, image) != simplex:
                details.append(f"section is not a right inverse at {simplex!r}")
                break
        if len(set(sections.values())) != len(nerve) or set(sections.values()) != set(normal):
            details.append(f"section hits {len(set(sections.values()))} of {len(normal)} normal simplices")
        checked = normal
        tot_count = len(normal)
        if full:
            checked = tot_r_direct(X, k, budget)
            tot_count = len(checked)
        reached = set()
        for t in checked:
            budget.spend()
            image = tot_to_nerve(C, desc, t)
            reached.add(image)
            if image not in nerve_set:
                details.append(f"composite of a {k}-simplex is not in N(Desc): {image!r}")
                break
            if any(tot_to_nerve(C, desc, t.face(j)) != _nerve_face(image, k, j) for j in range(k + 1)):
                details.append("composition does not commute with faces")
                break
        if full and reached != nerve_set:
            details.append(f"composition reaches {len(reached)} of {len(nerve)} nerve simplices")
        rows.append(DimensionComparison(k, len(nerve), tot_count, len(normal), not details, details))
    report = ComparisonReport(C.name, rows)
    logger.info(f"[compare_nerve_tot] {report.summary()}")
    return report


def tot_components(
    C: RestrictedCosimplicial2Groupoid,
    budget: SearchBudget | int | None = None,
    edges: str = "normal",
) -> list[list[DescentDatum]]:
    """π₀ of Tot_r(rN G•) as a partition of the descent data.

    Vertices are the Tot_r vertices read as data; edges are ``all``
    1-simplices, the ``normal`` ones, or the ``local`` normal ones whose edge
    over n = 0 and upper 2-cell over n = 1 are identities off one coordinate.
    Every gauge transformation of a power level is a composite of local ones,
    so all three families give the same components.
    """
    budget = ensure_budget(budget, "tot_components")
    X = levelwise_nerve(C)
    vertices = tot_r_direct(X, 0, budget)
    uf = UnionFind(vertex_to_datum(v) for v in vertices)
    if edges not in ("all", "normal", "local"):
        raise ValueError(f"unknown edge family {edges!r}")
    paths = iter_tot(X, 1, budget, normal_only=edges != "all", local=edges == "local")
    for path in paths:
        uf.union(vertex_to_datum(path.face(1)), vertex_to_datum(path.face(0)))
    classes = uf.classes()
    logger.info(f"[tot_components] {C.name}: {len(vertices)} vertices, {len(classes)} components ({edges} edges)")
    return classes


def translation_holds(
    C: RestrictedCosimplicial2Groupoid, budget: SearchBudget | int | None = None, edges: str = "normal"
) -> bool:
    """π₀ of Tot_r equals the gauge-class partition, as sets of sets."""
    budget = ensure_budget(budget, "translation")
    classification = gauge_classes(C, budget)
    return classification.partition() == {frozenset(members) for members in tot_components(C, budget, edges)}
