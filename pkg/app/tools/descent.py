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

"""Descent data of a restricted cosimplicial 2-groupoid and the descent 2-groupoid.

Index conventions. Inside Gⁿ the coface d^i deletes vertex i, so for a datum
(x, g, a) the three edges of the basic triangle in G² are g₀₁ = d²g, g₀₂ = d¹g
and g₁₂ = d⁰g, and a: g₀₂ ⇒ g₁₂∘g₀₁. For a gauge transformation (f, c) the
vertex images of f in G² are f₀ = d²d¹f, f₁ = d²d⁰f, f₂ = d¹d⁰f and the edge
images of c are c₀₁ = d²c, c₀₂ = d¹c, c₁₂ = d⁰c.

Composition follows `TwoGroupoid`: `compose1(f, g)` is g∘f.
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import DescentTypingError
from app.app_utils.union_find import UnionFind, partition_key
from app.tools.cosimplicial import LevelwiseMap, RestrictedCosimplicial2Groupoid, apply_functor
from app.tools.homotopy import WeakEquivalenceResult, is_weak_equivalence
from app.tools.two_groupoid import Cell, TwoFunctor, TwoGroupoid, ValidationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DescentDatum:
    """(x, g, a) with g: d¹x → d⁰x in G¹ and a: d¹g ⇒ d⁰g∘d²g in G²."""

    x: Cell
    g: Cell
    a: Cell


@dataclass(frozen=True, order=True)
class GaugeTransformation:
    """(f, c): d ⇝ d′ with f: x → x′ in G⁰ and c: d⁰f∘g ⇒ g′∘d¹f in G¹."""

    source: DescentDatum
    target: DescentDatum
    f: Cell
    c: Cell


@dataclass(frozen=True, order=True)
class DescentCell2:
    """m: f ⇒ f′ in G⁰ between parallel gauge transformations."""

    source: GaugeTransformation
    target: GaugeTransformation
    m: Cell


@dataclass(frozen=True)
class CocycleCheck:
    """Both sides of the twisted 2-cocycle equation in G³."""

    holds: bool
    left: Cell
    right: Cell

    def __bool__(self) -> bool:
        return self.holds


def coface(C: RestrictedCosimplicial2Groupoid, n: int, i: int, dim: int, cell: Cell) -> Cell:
    """d^i into degree n applied to a cell of dimension `dim`."""
    return apply_functor(C.coface(n, i), dim, cell)


def _double_coface(C: RestrictedCosimplicial2Groupoid, first: int, second: int, dim: int, cell: Cell) -> Cell:
    """d^second d^first from degree 0 into degree 2."""
    return coface(C, 2, second, dim, coface(C, 1, first, dim, cell))


# ---------------------------------------------------------------------------
# Descent data
# ---------------------------------------------------------------------------


def _check_datum_typing(C: RestrictedCosimplicial2Groupoid, x: Cell, g: Cell, a: Cell) -> None:
    G0, G1, G2 = C.levels[:3]
    if x not in set(G0.objects()):
        raise DescentTypingError("x", f"{x!r} is not an object of degree 0")
    expected = (coface(C, 1, 1, 0, x), coface(C, 1, 0, 0, x))
    if (G1.one_cell_source(g), G1.one_cell_target(g)) != expected:
        raise DescentTypingError("g: d1x -> d0x", f"{g!r} does not run from d1x to d0x")
    boundary = (coface(C, 2, 1, 1, g), G2.compose1(coface(C, 2, 2, 1, g), coface(C, 2, 0, 1, g)))
    if (G2.two_cell_source(a), G2.two_cell_target(a)) != boundary:
        raise DescentTypingError("a: d1g => d0g.d2g", f"{a!r} has the wrong boundary")


def check_cocycle(C: RestrictedCosimplicial2Groupoid, x: Cell, g: Cell, a: Cell) -> CocycleCheck:
    """Evaluates (1_{d¹d⁰g} ∘ d³a) * d¹a and (d⁰a ∘ 1_{d²d²g}) * d²a in G³.

    Raises:
        DescentTypingError: If x, g or a is mistyped; the message names the arrow.
    """
    _check_datum_typing(C, x, g, a)
    G3 = C.level(3)
    g23 = coface(C, 3, 1, 1, coface(C, 2, 0, 1, g))
    g01 = coface(C, 3, 2, 1, coface(C, 2, 2, 1, g))
    left = G3.vertical_compose(coface(C, 3, 1, 2, a), G3.whisker_after(coface(C, 3, 3, 2, a), g23))
    right = G3.vertical_compose(coface(C, 3, 2, 2, a), G3.whisker_before(g01, coface(C, 3, 0, 2, a)))
    return CocycleCheck(left == right, left, right)


def enumerate_descent_data(
    C: RestrictedCosimplicial2Groupoid, budget: SearchBudget | int | None = None
) -> list[DescentDatum]:
    """Every (x, g, a) satisfying the cocycle equation, in object/hom order.

    Raises:
        BudgetExceededError: If more than `budget` candidate triples are examined.
    """
    budget = ensure_budget(budget, "enumerate_descent_data")
    G0, G1, G2 = C.levels[:3]
    data = []
    for x in G0.objects():
        for g in G1.hom1(coface(C, 1, 1, 0, x), coface(C, 1, 0, 0, x)):
            source = coface(C, 2, 1, 1, g)
            target = G2.compose1(coface(C, 2, 2, 1, g), coface(C, 2, 0, 1, g))
            for a in G2.hom2(source, target):
                budget.spend()
                if check_cocycle(C, x, g, a):
                    data.append(DescentDatum(x, g, a))
    logger.info(f"[enumerate_descent_data] {C.name}: {len(data)} descent data")
    return data


def validate_descent_data(C: RestrictedCosimplicial2Groupoid, data: Sequence[DescentDatum]) -> ValidationReport:
    """Reports every datum failing typing or the cocycle equation."""
    report = ValidationReport(f"data({C.name})")
    for datum in data:
        try:
            if not check_cocycle(C, datum.x, datum.g, datum.a):
                report.add("cocycle", f"{datum!r} violates the twisted 2-cocycle equation")
        except DescentTypingError as e:
            report.add("typing", f"{datum!r}: {e}")
    return report


# ---------------------------------------------------------------------------
# Gauge transformations
# ---------------------------------------------------------------------------


def prism_sides(
    C: RestrictedCosimplicial2Groupoid, source: DescentDatum, target: DescentDatum, f: Cell, c: Cell
) -> tuple[Cell, Cell]:
    """Both composites g₀₂·f₂ ⇒ f₀·g′₀₁·g′₁₂ of the prism in G².

    The left side is (a′ ∘ 1_{f₀}) * c₀₂; the right side is
    (1_{g′₁₂} ∘ c₀₁) * (c₁₂ ∘ 1_{g₀₁}) * (1_{f₂} ∘ a).

    Raises:
        DescentTypingError: If f or c is mistyped.
    """
    G0, G1, G2 = C.levels[:3]
    if (G0.one_cell_source(f), G0.one_cell_target(f)) != (source.x, target.x):
        raise DescentTypingError("f: x -> x'", f"{f!r} does not join {source.x!r} and {target.x!r}")
    boundary = (
        G1.compose1(source.g, coface(C, 1, 0, 1, f)),
        G1.compose1(coface(C, 1, 1, 1, f), target.g),
    )
    if (G1.two_cell_source(c), G1.two_cell_target(c)) != boundary:
        raise DescentTypingError("c: d0f.g => g'.d1f", f"{c!r} has the wrong boundary")
    f0 = _double_coface(C, 1, 2, 1, f)
    f2 = _double_coface(C, 0, 1, 1, f)
    g01 = coface(C, 2, 2, 1, source.g)
    g12_target = coface(C, 2, 0, 1, target.g)
    c01, c02, c12 = (coface(C, 2, i, 2, c) for i in (2, 1, 0))
    left = G2.vertical_compose(c02, G2.whisker_before(f0, target.a))
    right = G2.vertical_chain(
        G2.whisker_after(source.a, f2),
        G2.whisker_before(g01, c12),
        G2.whisker_after(c01, g12_target),
    )
    return left, right


def is_gauge(C: RestrictedCosimplicial2Groupoid, source: DescentDatum, target: DescentDatum, f: Cell, c: Cell) -> bool:
    """Typing plus the prism equation.

    Raises:
        DescentTypingError: If f or c is mistyped.
    """
    left, right = prism_sides(C, source, target, f, c)
    return left == right


def gauge_target(C: RestrictedCosimplicial2Groupoid, source: DescentDatum, f: Cell, c: Cell) -> DescentDatum:
    """The unique datum d′ making (f, c): d ⇝ d′ a gauge transformation.

    g′ is read off the target of c and a′ is solved from the prism.
    """
    G0, G1, G2 = C.levels[:3]
    x_target = G0.one_cell_target(f)
    g_target = G1.compose1(G1.inverse1(coface(C, 1, 1, 1, f)), G1.two_cell_target(c))
    f0 = _double_coface(C, 1, 2, 1, f)
    f2 = _double_coface(C, 0, 1, 1, f)
    g01 = coface(C, 2, 2, 1, source.g)
    g12_target = coface(C, 2, 0, 1, g_target)
    c01, c02, c12 = (coface(C, 2, i, 2, c) for i in (2, 1, 0))
    right = G2.vertical_chain(
        G2.whisker_after(source.a, f2),
        G2.whisker_before(g01, c12),
        G2.whisker_after(c01, g12_target),
    )
    a_target = G2.whisker_before(G2.inverse1(f0), G2.vertical_compose(G2.vertical_inverse(c02), right))
    return DescentDatum(x_target, g_target, a_target)


def gauge_from(C: RestrictedCosimplicial2Groupoid, source: DescentDatum, f: Cell, c: Cell) -> GaugeTransformation:
    return GaugeTransformation(source, gauge_target(C, source, f, c), f, c)


def identity_gauge(C: RestrictedCosimplicial2Groupoid, datum: DescentDatum) -> GaugeTransformation:
    """(1_x, 1_g)."""
    return GaugeTransformation(datum, datum, C.level(0).identity1(datum.x), C.level(1).identity2(datum.g))


def compose_gauges(
    C: RestrictedCosimplicial2Groupoid, first: GaugeTransformation, second: GaugeTransformation
) -> GaugeTransformation:
    """first then second: (f′∘f, (c′ ∘ 1_{d¹f}) * (1_{d⁰f′} ∘ c))."""
    G0, G1 = C.level(0), C.level(1)
    if first.target != second.source:
        raise DescentTypingError("compose", f"{first.target!r} is not the source of the second gauge")
    c = G1.vertical_compose(
        G1.whisker_after(first.c, coface(C, 1, 0, 1, second.f)),
        G1.whisker_before(coface(C, 1, 1, 1, first.f), second.c),
    )
    return GaugeTransformation(first.source, second.target, G0.compose1(first.f, second.f), c)


def inverse_gauge(C: RestrictedCosimplicial2Groupoid, gauge: GaugeTransformation) -> GaugeTransformation:
    """(f⁻¹, c̄) with c̄ the vertical inverse of c whiskered by d¹f⁻¹ and d⁰f⁻¹."""
    G0, G1 = C.level(0), C.level(1)
    f_inverse = G0.inverse1(gauge.f)
    whiskered = G1.whisker_after(
        G1.whisker_before(coface(C, 1, 1, 1, f_inverse), gauge.c), coface(C, 1, 0, 1, f_inverse)
    )
    return GaugeTransformation(gauge.target, gauge.source, f_inverse, G1.vertical_inverse(whiskered))


def find_gauge(
    C: RestrictedCosimplicial2Groupoid,
    source: DescentDatum,
    target: DescentDatum,
    budget: SearchBudget | int | None = None,
) -> GaugeTransformation | None:
    """First (f, c): source ⇝ target, f ascending then c ascending."""
    budget = ensure_budget(budget, "find_gauge")
    G0, G1 = C.level(0), C.level(1)
    for f in G0.hom1(source.x, target.x):
        for c in G1.hom2(G1.compose1(source.g, coface(C, 1, 0, 1, f)), G1.compose1(coface(C, 1, 1, 1, f), target.g)):
            budget.spend()
            if is_gauge(C, source, target, f, c):
                return GaugeTransformation(source, target, f, c)
    return None


def gauge_generators(C: RestrictedCosimplicial2Groupoid, datum: DescentDatum) -> Iterator[GaugeTransformation]:
    """Gauge transformations out of `datum` whose composites reach all of them.

    For every generating 1-cell f out of x one transformation with an identity
    c, then (1_x, c) for every non-identity generating 2-cell c out of g.
    """
    G0, G1 = C.level(0), C.level(1)
    for f in G0.generating_one_cells_from(datum.x):
        yield gauge_from(C, datum, f, G1.identity2(G1.compose1(datum.g, coface(C, 1, 0, 1, f))))
    unit_x = G0.identity1(datum.x)
    unit_g = G1.identity2(datum.g)
    for c in G1.generating_two_cells_from(datum.g):
        if c != unit_g:
            yield gauge_from(C, datum, unit_x, c)


def validate_gauge(C: RestrictedCosimplicial2Groupoid, gauges: Sequence[GaugeTransformation]) -> ValidationReport:
    """Reports every gauge failing typing or the prism equation."""
    report = ValidationReport(f"gauges({C.name})")
    for gauge in gauges:
        try:
            if not is_gauge(C, gauge.source, gauge.target, gauge.f, gauge.c):
                report.add("prism", f"({gauge.f!r}, {gauge.c!r}) does not make the prism commute")
        except DescentTypingError as e:
            report.add("typing", f"({gauge.f!r}, {gauge.c!r}): {e}")
    return report


@dataclass
class GaugeClassification:
    """Descent data partitioned by gauge equivalence.

    `witnesses` holds, in discovery order, the gauge transformations that
    merged two previously distinct classes.
    """

    name: str
    data: list[DescentDatum]
    classes: list[list[DescentDatum]]
    witnesses: list[GaugeTransformation] = field(default_factory=list)

    @property
    def representatives(self) -> list[DescentDatum]:
        return [members[0] for members in self.classes]

    @cached_property
    def _class_index(self) -> dict[DescentDatum, int]:
        return {d: position for position, members in enumerate(self.classes) for d in members}

    def class_of(self, datum: DescentDatum) -> int:
        return self._class_index[datum]

    def partition(self) -> frozenset[frozenset[DescentDatum]]:
        return partition_key(self.classes)

    def summary(self) -> str:
        return f"{self.name}: {len(self.data)} descent data, {len(self.classes)} gauge classes"


def gauge_classes(
    C: RestrictedCosimplicial2Groupoid,
    budget: SearchBudget | int | None = None,
    exhaustive: bool = False,
    data: Sequence[DescentDatum] | None = None,
) -> GaugeClassification:
    """Partitions the descent data into gauge classes.

    By default each datum is joined to the targets of its generating gauge
    transformations. With `exhaustive`, every pair of data in distinct classes
    is searched for a witness (f ascending, then c ascending).

    Raises:
        BudgetExceededError: If the search exceeds `budget`.
        RuntimeError: If a solved gauge target is not a descent datum.
    """
    budget = ensure_budget(budget, "gauge_classes")
    data = list(data) if data is not None else enumerate_descent_data(C, budget)
    known = set(data)
    uf = UnionFind(data)
    witnesses = []
    if exhaustive:
        for position, source in enumerate(data):
            for target in data[position + 1 :]:
                if uf.connected(source, target):
                    continue
                witness = find_gauge(C, source, target, budget)
                if witness is not None:
                    uf.union(source, target)
                    witnesses.append(witness)
    else:
        for datum in data:
            for gauge in gauge_generators(C, datum):
                budget.spend()
                if gauge.target not in known:
                    raise RuntimeError(f"[gauge_classes] gauge target {gauge.target!r} is not a descent datum")
                if not uf.connected(datum, gauge.target):
                    uf.union(datum, gauge.target)
                    witnesses.append(gauge)
    classification = GaugeClassification(C.name, data, uf.classes(), witnesses)
    logger.info(f"[gauge_classes] {classification.summary()}")
    return classification


# ---------------------------------------------------------------------------
# The descent 2-groupoid
# ---------------------------------------------------------------------------


class DescentTwoGroupoid(TwoGroupoid):
    """Desc(G•): descent data, gauge transformations and cylinder 2-cells.

    A 2-cell m: (f, c) ⇒ (f′, c′) is m: f ⇒ f′ in G⁰ with
    (1_{g′} ∘ d¹m) * c = c′ * (d⁰m ∘ 1_g); given m the target c′ is unique.
    """

    def __init__(self, cosimplicial: RestrictedCosimplicial2Groupoid, budget: SearchBudget | int | None = None) -> None:
        self.cosimplicial = cosimplicial
        self.budget = ensure_budget(budget, "descent_2groupoid")
        self.name = f"Desc({cosimplicial.name})"

    def __repr__(self) -> str:
        return f"DescentTwoGroupoid({self.cosimplicial.name})"

    @cached_property
    def _data(self) -> list[DescentDatum]:
        return enumerate_descent_data(self.cosimplicial, self.budget)

    def objects(self) -> Sequence[Cell]:
        return self._data

    def one_cell_source(self, f: Cell) -> Cell:
        return f.source

    def one_cell_target(self, f: Cell) -> Cell:
        return f.target

    def hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        C = self.cosimplicial
        G0, G1 = C.level(0), C.level(1)
        gauges = []
        for f in G0.hom1(x.x, y.x):
            for c in G1.hom2(G1.compose1(x.g, coface(C, 1, 0, 1, f)), G1.compose1(coface(C, 1, 1, 1, f), y.g)):
                self.budget.spend()
                if is_gauge(C, x, y, f, c):
                    gauges.append(GaugeTransformation(x, y, f, c))
        return gauges

    def identity1(self, x: Cell) -> Cell:
        return identity_gauge(self.cosimplicial, x)

    def compose1(self, f: Cell, g: Cell) -> Cell:
        composite = compose_gauges(self.cosimplicial, f, g)
        expected = gauge_target(self.cosimplicial, composite.source, composite.f, composite.c)
        if expected != composite.target:
            raise RuntimeError(f"[descent_2groupoid] pasted gauge does not land on {composite.target!r}")
        return composite

    def inverse1(self, f: Cell) -> Cell:
        return inverse_gauge(self.cosimplicial, f)

    def two_cell_source(self, a: Cell) -> Cell:
        return a.source

    def two_cell_target(self, a: Cell) -> Cell:
        return a.target

    def cylinder_target(self, gauge: GaugeTransformation, m: Cell) -> GaugeTransformation:
        """The unique gauge (f′, c′) such that m: f ⇒ f′ is a 2-cell out of `gauge`."""
        C = self.cosimplicial
        G0, G1 = C.level(0), C.level(1)
        g, g_target = gauge.source.g, gauge.target.g
        along_source = G1.whisker_before(g, coface(C, 1, 0, 2, m))
        along_target = G1.whisker_after(coface(C, 1, 1, 2, m), g_target)
        c = G1.vertical_compose(G1.vertical_inverse(along_source), G1.vertical_compose(gauge.c, along_target))
        return GaugeTransformation(gauge.source, gauge.target, G0.two_cell_target(m), c)

    def hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        G0 = self.cosimplicial.level(0)
        cells = []
        for m in G0.hom2(f.f, g.f):
            self.budget.spend()
            if self.cylinder_target(f, m) == g:
                cells.append(DescentCell2(f, g, m))
        return cells

    def identity2(self, f: Cell) -> Cell:
        return DescentCell2(f, f, self.cosimplicial.level(0).identity2(f.f))

    def vertical_compose(self, a: Cell, b: Cell) -> Cell:
        return DescentCell2(a.source, b.target, self.cosimplicial.level(0).vertical_compose(a.m, b.m))

    def horizontal_compose(self, a: Cell, b: Cell) -> Cell:
        return DescentCell2(
            self.compose1(a.source, b.source),
            self.compose1(a.target, b.target),
            self.cosimplicial.level(0).horizontal_compose(a.m, b.m),
        )

    def vertical_inverse(self, a: Cell) -> Cell:
        return DescentCell2(a.target, a.source, self.cosimplicial.level(0).vertical_inverse(a.m))

    def one_cells_from(self, x: Cell) -> Iterator[Cell]:
        C = self.cosimplicial
        G0, G1 = C.level(0), C.level(1)
        for f in G0.one_cells_from(x.x):
            for c in G1.two_cells_from(G1.compose1(x.g, coface(C, 1, 0, 1, f))):
                self.budget.spend()
                yield gauge_from(C, x, f, c)

    def two_cells_from(self, f: Cell) -> Iterator[Cell]:
        for m in self.cosimplicial.level(0).two_cells_from(f.f):
            self.budget.spend()
            yield DescentCell2(f, self.cylinder_target(f, m), m)

    def generating_one_cells_from(self, x: Cell) -> Iterator[Cell]:
        return gauge_generators(self.cosimplicial, x)

    def generating_two_cells_from(self, f: Cell) -> Iterator[Cell]:
        for m in self.cosimplicial.level(0).generating_two_cells_from(f.f):
            yield DescentCell2(f, self.cylinder_target(f, m), m)


def descent_2groupoid(
    C: RestrictedCosimplicial2Groupoid, budget: SearchBudget | int | None = None
) -> DescentTwoGroupoid:
    return DescentTwoGroupoid(C, budget)


# ---------------------------------------------------------------------------
# Functoriality and invariance
# ---------------------------------------------------------------------------


class InducedDescentFunctor(TwoFunctor):
    """Desc(φ): applies φ⁰, φ¹, φ² to data, φ⁰, φ¹ to gauges and φ⁰ to 2-cells."""

    def __init__(self, levelwise: LevelwiseMap, source: DescentTwoGroupoid, target: DescentTwoGroupoid) -> None:
        self.levelwise = levelwise
        self.source = source
        self.target = target
        self.name = f"Desc({levelwise.name})"

    def on_object(self, x: Cell) -> Cell:
        phi = self.levelwise.components
        return DescentDatum(phi[0].on_object(x.x), phi[1].on_one_cell(x.g), phi[2].on_two_cell(x.a))

    def on_one_cell(self, f: Cell) -> Cell:
        phi = self.levelwise.components
        return GaugeTransformation(self.on_object(f.source), self.on_object(f.target), phi[0].on_one_cell(f.f), phi[1].on_two_cell(f.c))

    def on_two_cell(self, a: Cell) -> Cell:
        return DescentCell2(self.on_one_cell(a.source), self.on_one_cell(a.target), self.levelwise.components[0].on_two_cell(a.m))


def induced_descent_map(
    levelwise: LevelwiseMap, budget: SearchBudget | int | None = None
) -> InducedDescentFunctor:
    """The 2-functor Desc(G•) → Desc(H•) of a coface-compatible level-wise map.

    Raises:
        CofaceCompatibilityError: Naming the first coface (n, i) that φ does not
            commute with.
    """
    budget = ensure_budget(budget, "induced_descent_map")
    levelwise.check_compatibility(budget)
    return InducedDescentFunctor(
        levelwise, descent_2groupoid(levelwise.source, budget), descent_2groupoid(levelwise.target, budget)
    )


@dataclass
class InvarianceReport:
    """Outcome of comparing gauge classes through a level-wise map.

    `asserted` is False when the map is not a level-wise weak equivalence; the
    class comparison is then informative only.
    """

    name: str
    levelwise: list[WeakEquivalenceResult]
    source_classes: int
    target_classes: int
    bijective: bool
    desc_equivalence: WeakEquivalenceResult | None = None

    @property
    def asserted(self) -> bool:
        return all(self.levelwise)

    @property
    def passed(self) -> bool:
        return not self.asserted or self.bijective

    def summary(self) -> str:
        if not self.asserted:
            failing = next(result for result in self.levelwise if not result)
            return (
                f"{self.name}: not a weak equivalence ({failing.witness}); invariance not asserted "
                f"({self.source_classes} -> {self.target_classes} classes)"
            )
        verdict = "bijection" if self.bijective else "NOT a bijection"
        return f"{self.name}: level-wise weak equivalence; classes {self.source_classes} -> {self.target_classes}, {verdict}"


def check_invariance(
    levelwise: LevelwiseMap, budget: SearchBudget | int | None = None, full: bool = False
) -> InvarianceReport:
    """Tests level-wise weak equivalence, then the induced map on gauge classes.

    With `full`, the induced 2-functor of descent 2-groupoids is itself tested
    for being a weak equivalence (only feasible for small fixtures).

    Raises:
        CofaceCompatibilityError: If φ does not commute with some coface.
    """
    budget = ensure_budget(budget, "check_invariance")
    functor = induced_descent_map(levelwise, budget)
    levelwise_results = [is_weak_equivalence(component, budget) for component in levelwise.components]
    source = gauge_classes(levelwise.source, budget)
    target = gauge_classes(levelwise.target, budget)
    images = {position: target.class_of(functor.on_object(members[0])) for position, members in enumerate(source.classes)}
    # the image of every member must land in the class of its representative's image
    consistent = all(
        target.class_of(functor.on_object(d)) == images[position]
        for position, members in enumerate(source.classes)
        for d in members
    )
    bijective = consistent and sorted(images.values()) == list(range(len(target.classes)))
    report = InvarianceReport(levelwise.name, levelwise_results, len(source.classes), len(target.classes), bijective)
    if full:
        report.desc_equivalence = is_weak_equivalence(functor, budget)
    logger.info(f"[check_invariance] {report.summary()}")
    return report
