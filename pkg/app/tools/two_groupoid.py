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

"""Finite strict 2-groupoids, 2-functors, transformations and modifications.

Conventions used throughout the package:

* `compose1(f, g)` is g∘f: first f, then g.
* `vertical_compose(a, b)` is b*a: first a, then b.
* `horizontal_compose(a, b)` is b∘a: a lives over x→y, b over y→z.
* `whisker_before(f, a)` is a∘1_f and `whisker_after(a, f)` is 1_f∘a.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product as cartesian_product
from typing import Any

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import CompositionError, StructuralError
from app.app_utils.search import backtrack_assignments

logger = logging.getLogger(__name__)

Cell = Hashable


# ---------------------------------------------------------------------------
# Validation reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance."""

    family: str
    detail: str

    def __str__(self) -> str:
        return f"{self.family}: {self.detail}"


@dataclass
class ValidationReport:
    """Ordered list of violations; an empty report means valid."""

    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def add(self, family: str, detail: str) -> None:
        self.violations.append(Violation(family, detail))

    def families(self) -> set[str]:
        return {violation.family for violation in self.violations}

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def summary(self) -> str:
        if self.is_valid:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines.extend(f"  {violation}" for violation in self.violations)
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# The interface
# ---------------------------------------------------------------------------


class TwoGroupoid(ABC):
    """A finite strict 2-groupoid.

    Subclasses provide objects, hom-sets, identities and the three compositions.
    Inverses, whiskering and cell listings are derived here.
    """

    name: str = "G"

    @abstractmethod
    def objects(self) -> Sequence[Cell]: ...

    @abstractmethod
    def one_cell_source(self, f: Cell) -> Cell: ...

    @abstractmethod
    def one_cell_target(self, f: Cell) -> Cell: ...

    @abstractmethod
    def hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        """1-cells x → y in ascending order."""

    @abstractmethod
    def identity1(self, x: Cell) -> Cell: ...

    @abstractmethod
    def compose1(self, f: Cell, g: Cell) -> Cell:
        """g∘f for f: x → y and g: y → z."""

    @abstractmethod
    def two_cell_source(self, a: Cell) -> Cell: ...

    @abstractmethod
    def two_cell_target(self, a: Cell) -> Cell: ...

    @abstractmethod
    def hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        """2-cells f ⇒ g in ascending order (empty unless f and g are parallel)."""

    @abstractmethod
    def identity2(self, f: Cell) -> Cell: ...

    @abstractmethod
    def vertical_compose(self, a: Cell, b: Cell) -> Cell:
        """b*a for a: f ⇒ g and b: g ⇒ h."""

    @abstractmethod
    def horizontal_compose(self, a: Cell, b: Cell) -> Cell:
        """b∘a for a over x → y and b over y → z."""

    # -- derived listings ---------------------------------------------------

    def one_cells_from(self, x: Cell) -> Iterator[Cell]:
        for y in self.objects():
            yield from self.hom1(x, y)

    def one_cells(self) -> Iterator[Cell]:
        for x in self.objects():
            yield from self.one_cells_from(x)

    def parallel_one_cells(self, f: Cell) -> Sequence[Cell]:
        return self.hom1(self.one_cell_source(f), self.one_cell_target(f))

    def two_cells_from(self, f: Cell) -> Iterator[Cell]:
        for g in self.parallel_one_cells(f):
            yield from self.hom2(f, g)

    def two_cells(self) -> Iterator[Cell]:
        for f in self.one_cells():
            yield from self.two_cells_from(f)

    def generating_one_cells_from(self, x: Cell) -> Iterator[Cell]:
        """1-cells out of x whose composites reach every 1-cell out of x."""
        return self.one_cells_from(x)

    def generating_two_cells_from(self, f: Cell) -> Iterator[Cell]:
        """2-cells out of f whose vertical composites reach every 2-cell out of f."""
        return self.two_cells_from(f)

    def local_hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        """1-cells x → y that are identities away from a single coordinate.

        A 2-groupoid without coordinates is its own single coordinate.
        """
        return self.hom1(x, y)

    def local_hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        """2-cells f ⇒ g that are identities away from a single coordinate."""
        return self.hom2(f, g)

    def cell_counts(self) -> tuple[int, int, int]:
        objects = len(self.objects())
        one_cells = sum(1 for _ in self.one_cells())
        two_cells = sum(1 for _ in self.two_cells())
        return objects, one_cells, two_cells

    # -- inverses -------------------------------------------------------------

    def inverse1(self, f: Cell) -> Cell:
        cache = self.__dict__.setdefault("_inverse1_cache", {})
        if f not in cache:
            x, y = self.one_cell_source(f), self.one_cell_target(f)
            for h in self.hom1(y, x):
                if self.compose1(f, h) == self.identity1(x) and self.compose1(h, f) == self.identity1(y):
                    cache[f] = h
                    break
            else:
                raise StructuralError(f"1-cell {f!r} of {self.name} has no inverse")
        return cache[f]

    def vertical_inverse(self, a: Cell) -> Cell:
        cache = self.__dict__.setdefault("_vertical_inverse_cache", {})
        if a not in cache:
            f, g = self.two_cell_source(a), self.two_cell_target(a)
            for b in self.hom2(g, f):
                if self.vertical_compose(a, b) == self.identity2(f) and self.vertical_compose(b, a) == self.identity2(g):
                    cache[a] = b
                    break
            else:
                raise StructuralError(f"2-cell {a!r} of {self.name} has no vertical inverse")
        return cache[a]

    def horizontal_inverse(self, a: Cell) -> Cell:
        f, g = self.two_cell_source(a), self.two_cell_target(a)
        f_inverse, g_inverse = self.inverse1(f), self.inverse1(g)
        x = self.one_cell_source(f)
        for b in self.hom2(f_inverse, g_inverse):
            if self.horizontal_compose(a, b) == self.identity2(self.identity1(x)):
                return b
        raise StructuralError(f"2-cell {a!r} of {self.name} has no horizontal inverse")

    # -- whiskering -----------------------------------------------------------

    def whisker_before(self, f: Cell, a: Cell) -> Cell:
        """a∘1_f: first the 1-cell f, then the 2-cell a."""
        return self.horizontal_compose(self.identity2(f), a)

    def whisker_after(self, a: Cell, f: Cell) -> Cell:
        """1_f∘a: first the 2-cell a, then the 1-cell f."""
        return self.horizontal_compose(a, self.identity2(f))

    def vertical_chain(self, *cells: Cell) -> Cell:
        """Vertical composite of `cells` in the order given (first applied first)."""
        result = cells[0]
        for cell in cells[1:]:
            result = self.vertical_compose(result, cell)
        return result


# ---------------------------------------------------------------------------
# Table implementation
# ---------------------------------------------------------------------------


class TableTwoGroupoid(TwoGroupoid):
    """A strict 2-groupoid stored as explicit tables.

    Args:
        objects: Object identifiers.
        one_cells: 1-cell id → (source object, target object).
        id1: object → identity 1-cell.
        comp1: (f, g) → g∘f, defined exactly on composable pairs.
        two_cells: 2-cell id → (source 1-cell, target 1-cell), parallel.
        id2: 1-cell → identity 2-cell.
        vcomp: (a, b) → b*a.
        hcomp: (a, b) → b∘a.
        labels: Optional readable keys per dimension, e.g. pairs for products.
        name: Used in reports.

    Raises:
        StructuralError: On dangling identifiers, non-parallel 2-cells, or a
            composition table that is not defined on exactly the composable pairs.
    """

    def __init__(
        self,
        objects: Sequence[Cell],
        one_cells: Mapping[Cell, tuple[Cell, Cell]],
        id1: Mapping[Cell, Cell],
        comp1: Mapping[tuple[Cell, Cell], Cell],
        two_cells: Mapping[Cell, tuple[Cell, Cell]],
        id2: Mapping[Cell, Cell],
        vcomp: Mapping[tuple[Cell, Cell], Cell],
        hcomp: Mapping[tuple[Cell, Cell], Cell],
        labels: Mapping[int, Mapping[Cell, Any]] | None = None,
        name: str = "G",
    ) -> None:
        self.name = name
        self._objects = tuple(sorted(objects))
        self._one_cells = dict(one_cells)
        self._id1 = dict(id1)
        self._comp1 = dict(comp1)
        self._two_cells = dict(two_cells)
        self._id2 = dict(id2)
        self._vcomp = dict(vcomp)
        self._hcomp = dict(hcomp)
        self.labels = {dim: dict(mapping) for dim, mapping in (labels or {}).items()}
        self._check_structure()

        self._hom1: dict[tuple[Cell, Cell], list[Cell]] = {}
        for f in sorted(self._one_cells):
            self._hom1.setdefault(self._one_cells[f], []).append(f)
        self._hom2: dict[tuple[Cell, Cell], list[Cell]] = {}
        for a in sorted(self._two_cells):
            self._hom2.setdefault(self._two_cells[a], []).append(a)

    def _check_structure(self) -> None:
        object_set = set(self._objects)
        for f, (x, y) in self._one_cells.items():
            if x not in object_set or y not in object_set:
                raise StructuralError(f"1-cell {f!r} of {self.name} has dangling endpoint")
        for x in self._objects:
            if self._id1.get(x) not in self._one_cells:
                raise StructuralError(f"object {x!r} of {self.name} has no identity 1-cell")
            if self._one_cells[self._id1[x]] != (x, x):
                raise StructuralError(f"identity 1-cell of {x!r} in {self.name} is not a loop at {x!r}")
        for a, (f, g) in self._two_cells.items():
            if f not in self._one_cells or g not in self._one_cells:
                raise StructuralError(f"2-cell {a!r} of {self.name} has dangling boundary")
            if self._one_cells[f] != self._one_cells[g]:
                raise StructuralError(f"2-cell {a!r} of {self.name} joins non-parallel 1-cells")
        for f in self._one_cells:
            if self._id2.get(f) not in self._two_cells:
                raise StructuralError(f"1-cell {f!r} of {self.name} has no identity 2-cell")

        for (f, g), h in self._comp1.items():
            if f not in self._one_cells or g not in self._one_cells or h not in self._one_cells:
                raise StructuralError(f"comp1 entry {(f, g)!r} of {self.name} has dangling identifier")
            if self._one_cells[f][1] != self._one_cells[g][0]:
                raise StructuralError(f"comp1 entry {(f, g)!r} of {self.name} is on a non-composable pair")
        expected_pairs = sum(
            1 for f in self._one_cells for g in self._one_cells if self._one_cells[f][1] == self._one_cells[g][0]
        )
        if len(self._comp1) != expected_pairs:
            raise StructuralError(f"comp1 of {self.name} is not defined on every composable pair")

        for table_name, table in (("vcomp", self._vcomp), ("hcomp", self._hcomp)):
            for (a, b), c in table.items():
                if a not in self._two_cells or b not in self._two_cells or c not in self._two_cells:
                    raise StructuralError(f"{table_name} entry {(a, b)!r} of {self.name} has dangling identifier")
        vertical_pairs = sum(
            1 for a in self._two_cells for b in self._two_cells if self._two_cells[a][1] == self._two_cells[b][0]
        )
        if len(self._vcomp) != vertical_pairs:
            raise StructuralError(f"vcomp of {self.name} is not defined on every composable pair")
        horizontal_pairs = sum(
            1
            for a in self._two_cells
            for b in self._two_cells
            if self._one_cells[self._two_cells[a][0]][1] == self._one_cells[self._two_cells[b][0]][0]
        )
        if len(self._hcomp) != horizontal_pairs:
            raise StructuralError(f"hcomp of {self.name} is not defined on every composable pair")

    def __repr__(self) -> str:
        return f"TableTwoGroupoid({self.name}, cells={self.cell_counts()})"

    def objects(self) -> Sequence[Cell]:
        return self._objects

    def one_cell_source(self, f: Cell) -> Cell:
        return self._one_cells[f][0]

    def one_cell_target(self, f: Cell) -> Cell:
        return self._one_cells[f][1]

    def hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        return self._hom1.get((x, y), [])

    def identity1(self, x: Cell) -> Cell:
        return self._id1[x]

    def compose1(self, f: Cell, g: Cell) -> Cell:
        try:
            return self._comp1[(f, g)]
        except KeyError:
            raise CompositionError("1-cell", f, g) from None

    def two_cell_source(self, a: Cell) -> Cell:
        return self._two_cells[a][0]

    def two_cell_target(self, a: Cell) -> Cell:
        return self._two_cells[a][1]

    def hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        return self._hom2.get((f, g), [])

    def identity2(self, f: Cell) -> Cell:
        return self._id2[f]

    def vertical_compose(self, a: Cell, b: Cell) -> Cell:
        try:
            return self._vcomp[(a, b)]
        except KeyError:
            raise CompositionError("vertical", a, b) from None

    def horizontal_compose(self, a: Cell, b: Cell) -> Cell:
        try:
            return self._hcomp[(a, b)]
        except KeyError:
            raise CompositionError("horizontal", a, b) from None

    def one_cells(self) -> Iterator[Cell]:
        return iter(sorted(self._one_cells))

    def two_cells(self) -> Iterator[Cell]:
        return iter(sorted(self._two_cells))

    def cell_counts(self) -> tuple[int, int, int]:
        return len(self._objects), len(self._one_cells), len(self._two_cells)

    def label(self, dim: int, cell: Cell) -> Any:
        return self.labels.get(dim, {}).get(cell, cell)

    def tables(self) -> dict[str, Any]:
        """The raw tables, in the layout of the two_groupoid document."""
        return {
            "objects": list(self._objects),
            "one_cells": dict(self._one_cells),
            "id1": dict(self._id1),
            "comp1": dict(self._comp1),
            "two_cells": dict(self._two_cells),
            "id2": dict(self._id2),
            "vcomp": dict(self._vcomp),
            "hcomp": dict(self._hcomp),
        }

    def with_entry(self, table: str, key: Any, value: Any) -> "TableTwoGroupoid":
        """A copy with one table entry replaced (mutation testing)."""
        tables = self.tables()
        tables[table][key] = value
        return TableTwoGroupoid(**tables, name=f"{self.name}[{table}{key!r}->{value!r}]")


def tabulate(
    groupoid: TwoGroupoid,
    budget: SearchBudget | int | None = None,
    name: str | None = None,
) -> TableTwoGroupoid:
    """Tabulates any finite 2-groupoid with dense integer identifiers.

    The original cells are kept as `labels`, so `label(dim, id)` recovers them.

    Raises:
        BudgetExceededError: If the cells and composition tables exceed `budget`.
    """
    budget = ensure_budget(budget, "tabulate")
    objects = list(groupoid.objects())
    object_ids = {x: index for index, x in enumerate(objects)}
    one_cells = list(groupoid.one_cells())
    one_ids = {f: index for index, f in enumerate(one_cells)}
    two_cells = list(groupoid.two_cells())
    two_ids = {a: index for index, a in enumerate(two_cells)}
    budget.spend(len(objects) + len(one_cells) + len(two_cells))

    one_table = {
        one_ids[f]: (object_ids[groupoid.one_cell_source(f)], object_ids[groupoid.one_cell_target(f)])
        for f in one_cells
    }
    id1 = {object_ids[x]: one_ids[groupoid.identity1(x)] for x in objects}
    outgoing: dict[Cell, list[Cell]] = {}
    for f in one_cells:
        outgoing.setdefault(groupoid.one_cell_source(f), []).append(f)
    comp1 = {}
    for f in one_cells:
        for g in outgoing.get(groupoid.one_cell_target(f), []):
            budget.spend()
            comp1[(one_ids[f], one_ids[g])] = one_ids[groupoid.compose1(f, g)]

    two_table = {
        two_ids[a]: (one_ids[groupoid.two_cell_source(a)], one_ids[groupoid.two_cell_target(a)]) for a in two_cells
    }
    id2 = {one_ids[f]: two_ids[groupoid.identity2(f)] for f in one_cells}
    two_from: dict[Cell, list[Cell]] = {}
    two_over_source_object: dict[Cell, list[Cell]] = {}
    for a in two_cells:
        source = groupoid.two_cell_source(a)
        two_from.setdefault(source, []).append(a)
        two_over_source_object.setdefault(groupoid.one_cell_source(source), []).append(a)
    vcomp = {}
    hcomp = {}
    for a in two_cells:
        for b in two_from.get(groupoid.two_cell_target(a), []):
            budget.spend()
            vcomp[(two_ids[a], two_ids[b])] = two_ids[groupoid.vertical_compose(a, b)]
        middle = groupoid.one_cell_target(groupoid.two_cell_source(a))
        for b in two_over_source_object.get(middle, []):
            budget.spend()
            hcomp[(two_ids[a], two_ids[b])] = two_ids[groupoid.horizontal_compose(a, b)]

    logger.debug(f"[tabulate] {groupoid.name}: {len(objects)}/{len(one_cells)}/{len(two_cells)} cells")
    return TableTwoGroupoid(
        objects=list(object_ids.values()),
        one_cells=one_table,
        id1=id1,
        comp1=comp1,
        two_cells=two_table,
        id2=id2,
        vcomp=vcomp,
        hcomp=hcomp,
        labels={
            0: {index: x for x, index in object_ids.items()},
            1: {index: f for f, index in one_ids.items()},
            2: {index: a for a, index in two_ids.items()},
        },
        name=name or groupoid.name,
    )


def terminal_two_groupoid() -> TableTwoGroupoid:
    """One object, one 1-cell, one 2-cell."""
    return TableTwoGroupoid(
        objects=[0],
        one_cells={0: (0, 0)},
        id1={0: 0},
        comp1={(0, 0): 0},
        two_cells={0: (0, 0)},
        id2={0: 0},
        vcomp={(0, 0): 0},
        hcomp={(0, 0): 0},
        name="terminal",
    )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_two_groupoid(groupoid: TwoGroupoid, budget: SearchBudget | int | None = None) -> ValidationReport:
    """Scans every axiom instance of a strict 2-groupoid.

    Families reported: `typing`, `associativity`, `units`, `inverses`,
    `interchange`, `identity_functoriality`. The scan order is deterministic
    (ascending identifiers), so identical inputs give identical reports.
    """
    budget = ensure_budget(budget, "validate_two_groupoid")
    report = ValidationReport(groupoid.name)
    G = groupoid

    objects = list(G.objects())
    one_cells = list(G.one_cells())
    out_of: dict[Cell, list[Cell]] = {x: [] for x in objects}
    for f in one_cells:
        out_of[G.one_cell_source(f)].append(f)

    def attempt(family: str, detail: str, action: Callable[[], Any]) -> Any:
        try:
            return action()
        except (CompositionError, StructuralError, KeyError) as error:
            report.add(family, f"{detail}: {error}")
            return None

    # 1-cells
    for x in objects:
        identity = G.identity1(x)
        if (G.one_cell_source(identity), G.one_cell_target(identity)) != (x, x):
            report.add("typing", f"id1({x!r}) is not a loop at {x!r}")
    for f in one_cells:
        x, y = G.one_cell_source(f), G.one_cell_target(f)
        for g in out_of[y]:
            budget.spend()
            h = attempt("typing", f"comp1({f!r},{g!r})", lambda f=f, g=g: G.compose1(f, g))
            if h is not None and (G.one_cell_source(h), G.one_cell_target(h)) != (x, G.one_cell_target(g)):
                report.add("typing", f"comp1({f!r},{g!r})={h!r} has wrong endpoints")
        if G.compose1(G.identity1(x), f) != f or G.compose1(f, G.identity1(y)) != f:
            report.add("units", f"identity 1-cells are not units for {f!r}")
        if not any(G.compose1(f, h) == G.identity1(x) and G.compose1(h, f) == G.identity1(y) for h in G.hom1(y, x)):
            report.add("inverses", f"1-cell {f!r} has no inverse")
    for f in one_cells:
        for g in out_of[G.one_cell_target(f)]:
            for h in out_of[G.one_cell_target(g)]:
                budget.spend()
                left = G.compose1(G.compose1(f, g), h)
                right = G.compose1(f, G.compose1(g, h))
                if left != right:
                    report.add("associativity", f"comp1 on ({f!r},{g!r},{h!r}): {left!r} != {right!r}")

    # 2-cells
    two_cells = list(G.two_cells())
    two_from: dict[Cell, list[Cell]] = {f: [] for f in one_cells}
    over_object: dict[Cell, list[Cell]] = {x: [] for x in objects}
    for a in two_cells:
        two_from[G.two_cell_source(a)].append(a)
        over_object[G.one_cell_source(G.two_cell_source(a))].append(a)
    for f in one_cells:
        identity = G.identity2(f)
        if (G.two_cell_source(identity), G.two_cell_target(identity)) != (f, f):
            report.add("typing", f"id2({f!r}) is not an endomorphism of {f!r}")

    for a in two_cells:
        f, g = G.two_cell_source(a), G.two_cell_target(a)
        for b in two_from[g]:
            budget.spend()
            c = attempt("typing", f"vcomp({a!r},{b!r})", lambda a=a, b=b: G.vertical_compose(a, b))
            if c is not None and (G.two_cell_source(c), G.two_cell_target(c)) != (f, G.two_cell_target(b)):
                report.add("typing", f"vcomp({a!r},{b!r})={c!r} has wrong boundary")
        middle = G.one_cell_target(f)
        for b in over_object[middle]:
            budget.spend()
            c = attempt("typing", f"hcomp({a!r},{b!r})", lambda a=a, b=b: G.horizontal_compose(a, b))
            if c is None:
                continue
            expected = (
                G.compose1(f, G.two_cell_source(b)),
                G.compose1(g, G.two_cell_target(b)),
            )
            if (G.two_cell_source(c), G.two_cell_target(c)) != expected:
                report.add("typing", f"hcomp({a!r},{b!r})={c!r} has wrong boundary")
        if report.violations and report.violations[-1].family == "typing":
            continue
        if G.vertical_compose(G.identity2(f), a) != a or G.vertical_compose(a, G.identity2(g)) != a:
            report.add("units", f"identity 2-cells are not vertical units for {a!r}")
        x, y = G.one_cell_source(f), G.one_cell_target(f)
        unit_x, unit_y = G.identity2(G.identity1(x)), G.identity2(G.identity1(y))
        if G.horizontal_compose(unit_x, a) != a or G.horizontal_compose(a, unit_y) != a:
            report.add("units", f"identity 2-cells of identity 1-cells are not horizontal units for {a!r}")
        if not any(
            G.vertical_compose(a, b) == G.identity2(f) and G.vertical_compose(b, a) == G.identity2(g)
            for b in G.hom2(g, f)
        ):
            report.add("inverses", f"2-cell {a!r} has no vertical inverse")
        if not any(G.horizontal_compose(a, b) == unit_x for b in over_object[y]):
            report.add("inverses", f"2-cell {a!r} has no horizontal inverse")

    if report.families() & {"typing"}:
        return report

    for a in two_cells:
        for b in two_from[G.two_cell_target(a)]:
            ab = G.vertical_compose(a, b)
            for c in two_from[G.two_cell_target(b)]:
                budget.spend()
                if G.vertical_compose(ab, c) != G.vertical_compose(a, G.vertical_compose(b, c)):
                    report.add("associativity", f"vcomp on ({a!r},{b!r},{c!r})")
    for a in two_cells:
        for b in over_object[G.one_cell_target(G.two_cell_source(a))]:
            ab = G.horizontal_compose(a, b)
            for c in over_object[G.one_cell_target(G.two_cell_source(b))]:
                budget.spend()
                if G.horizontal_compose(ab, c) != G.horizontal_compose(a, G.horizontal_compose(b, c)):
                    report.add("associativity", f"hcomp on ({a!r},{b!r},{c!r})")

    # interchange: a, b over x → y vertically composable; a2, b2 over y → z likewise
    for a in two_cells:
        for b in two_from[G.two_cell_target(a)]:
            vertical_first = G.vertical_compose(a, b)
            middle = G.one_cell_target(G.two_cell_source(a))
            for a2 in over_object[middle]:
                for b2 in two_from[G.two_cell_target(a2)]:
                    budget.spend()
                    left = G.horizontal_compose(vertical_first, G.vertical_compose(a2, b2))
                    right = G.vertical_compose(G.horizontal_compose(a, a2), G.horizontal_compose(b, b2))
                    if left != right:
                        report.add("interchange", f"on ({a!r},{b!r};{a2!r},{b2!r}): {left!r} != {right!r}")

    for f in one_cells:
        for g in out_of[G.one_cell_target(f)]:
            budget.spend()
            if G.identity2(G.compose1(f, g)) != G.horizontal_compose(G.identity2(f), G.identity2(g)):
                report.add("identity_functoriality", f"id2({g!r}∘{f!r}) != id2({g!r})∘id2({f!r})")

    logger.debug(f"[validate_two_groupoid] {G.name}: {len(report.violations)} violation(s)")
    return report


def vertical_compose(groupoid: TwoGroupoid, a: Cell, b: Cell) -> Cell:
    """b*a, checking that the target of a is the source of b."""
    if groupoid.two_cell_target(a) != groupoid.two_cell_source(b):
        raise CompositionError("vertical", a, b)
    return groupoid.vertical_compose(a, b)


def horizontal_compose(groupoid: TwoGroupoid, a: Cell, b: Cell) -> Cell:
    """b∘a, checking that the underlying 1-cells compose."""
    middle_a = groupoid.one_cell_target(groupoid.two_cell_source(a))
    middle_b = groupoid.one_cell_source(groupoid.two_cell_source(b))
    if middle_a != middle_b:
        raise CompositionError("horizontal", a, b)
    return groupoid.horizontal_compose(a, b)


# ---------------------------------------------------------------------------
# 2-functors
# ---------------------------------------------------------------------------


class TwoFunctor(ABC):
    """A strict 2-functor between two 2-groupoids."""

    source: TwoGroupoid
    target: TwoGroupoid
    name: str = "F"

    @abstractmethod
    def on_object(self, x: Cell) -> Cell: ...

    @abstractmethod
    def on_one_cell(self, f: Cell) -> Cell: ...

    @abstractmethod
    def on_two_cell(self, a: Cell) -> Cell: ...


class TableTwoFunctor(TwoFunctor):
    """A 2-functor given by three total maps on identifiers."""

    def __init__(
        self,
        source: TwoGroupoid,
        target: TwoGroupoid,
        obj_map: Mapping[Cell, Cell],
        one_map: Mapping[Cell, Cell],
        two_map: Mapping[Cell, Cell],
        name: str = "F",
    ) -> None:
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.one_map = dict(one_map)
        self.two_map = dict(two_map)
        self.name = name
        missing = [x for x in source.objects() if x not in self.obj_map]
        missing += [f for f in source.one_cells() if f not in self.one_map]
        missing += [a for a in source.two_cells() if a not in self.two_map]
        if missing:
            raise StructuralError(f"functor {name} is not total: no image for {missing[:3]!r}")

    def on_object(self, x: Cell) -> Cell:
        return self.obj_map[x]

    def on_one_cell(self, f: Cell) -> Cell:
        return self.one_map[f]

    def on_two_cell(self, a: Cell) -> Cell:
        return self.two_map[a]

    def key(self) -> tuple[tuple[Cell, ...], tuple[Cell, ...], tuple[Cell, ...]]:
        return (
            tuple(self.obj_map[x] for x in self.source.objects()),
            tuple(self.one_map[f] for f in self.source.one_cells()),
            tuple(self.two_map[a] for a in self.source.two_cells()),
        )


class CallableTwoFunctor(TwoFunctor):
    """A 2-functor given by three functions."""

    def __init__(
        self,
        source: TwoGroupoid,
        target: TwoGroupoid,
        on_object: Callable[[Cell], Cell],
        on_one_cell: Callable[[Cell], Cell],
        on_two_cell: Callable[[Cell], Cell],
        name: str = "F",
    ) -> None:
        self.source = source
        self.target = target
        self._on_object = on_object
        self._on_one_cell = on_one_cell
        self._on_two_cell = on_two_cell
        self.name = name

    def on_object(self, x: Cell) -> Cell:
        return self._on_object(x)

    def on_one_cell(self, f: Cell) -> Cell:
        return self._on_one_cell(f)

    def on_two_cell(self, a: Cell) -> Cell:
        return self._on_two_cell(a)


def identity_functor(groupoid: TwoGroupoid) -> TwoFunctor:
    return CallableTwoFunctor(groupoid, groupoid, lambda x: x, lambda f: f, lambda a: a, name=f"id[{groupoid.name}]")


def compose_functors(first: TwoFunctor, second: TwoFunctor) -> TwoFunctor:
    """second∘first."""
    return CallableTwoFunctor(
        first.source,
        second.target,
        lambda x: second.on_object(first.on_object(x)),
        lambda f: second.on_one_cell(first.on_one_cell(f)),
        lambda a: second.on_two_cell(first.on_two_cell(a)),
        name=f"{second.name}∘{first.name}",
    )


def constant_functor(source: TwoGroupoid, target: TwoGroupoid, x: Cell) -> TwoFunctor:
    """Everything goes to the object x and its identities."""
    unit = target.identity1(x)
    unit2 = target.identity2(unit)
    return CallableTwoFunctor(source, target, lambda _: x, lambda _: unit, lambda _: unit2, name=f"const[{x!r}]")


def validate_two_functor(functor: TwoFunctor, budget: SearchBudget | int | None = None) -> ValidationReport:
    """Checks that a functor preserves boundaries, identities and all compositions."""
    budget = ensure_budget(budget, "validate_two_functor")
    report = ValidationReport(functor.name)
    G, H, F = functor.source, functor.target, functor

    for x in G.objects():
        if F.on_one_cell(G.identity1(x)) != H.identity1(F.on_object(x)):
            report.add("units", f"id1({x!r}) not preserved")
    one_cells = list(G.one_cells())
    for f in one_cells:
        budget.spend()
        image = F.on_one_cell(f)
        if (H.one_cell_source(image), H.one_cell_target(image)) != (
            F.on_object(G.one_cell_source(f)),
            F.on_object(G.one_cell_target(f)),
        ):
            report.add("typing", f"image of 1-cell {f!r} has wrong endpoints")
            continue
        if F.on_two_cell(G.identity2(f)) != H.identity2(image):
            report.add("units", f"id2({f!r}) not preserved")
        for g in G.one_cells_from(G.one_cell_target(f)):
            if F.on_one_cell(G.compose1(f, g)) != H.compose1(image, F.on_one_cell(g)):
                report.add("associativity", f"comp1({f!r},{g!r}) not preserved")
    if report.families() & {"typing"}:
        return report
    two_cells = list(G.two_cells())
    for a in two_cells:
        budget.spend()
        image = F.on_two_cell(a)
        if (H.two_cell_source(image), H.two_cell_target(image)) != (
            F.on_one_cell(G.two_cell_source(a)),
            F.on_one_cell(G.two_cell_target(a)),
        ):
            report.add("typing", f"image of 2-cell {a!r} has wrong boundary")
            continue
        for b in G.two_cells_from(G.two_cell_target(a)):
            if F.on_two_cell(G.vertical_compose(a, b)) != H.vertical_compose(image, F.on_two_cell(b)):
                report.add("associativity", f"vcomp({a!r},{b!r}) not preserved")
    if report.families() & {"typing"}:
        return report
    for a in two_cells:
        middle = G.one_cell_target(G.two_cell_source(a))
        for f in G.one_cells_from(middle):
            for b in G.two_cells_from(f):
                budget.spend()
                if F.on_two_cell(G.horizontal_compose(a, b)) != H.horizontal_compose(F.on_two_cell(a), F.on_two_cell(b)):
                    report.add("associativity", f"hcomp({a!r},{b!r}) not preserved")
    return report


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------


class ProductTwoGroupoid(TwoGroupoid):
    """G × H with pairs of cells and component-wise structure."""

    def __init__(self, first: TwoGroupoid, second: TwoGroupoid) -> None:
        self.first = first
        self.second = second
        self.name = f"{first.name}x{second.name}"
        self._objects = tuple(cartesian_product(first.objects(), second.objects()))

    def objects(self) -> Sequence[Cell]:
        return self._objects

    def one_cell_source(self, f: Cell) -> Cell:
        return (self.first.one_cell_source(f[0]), self.second.one_cell_source(f[1]))

    def one_cell_target(self, f: Cell) -> Cell:
        return (self.first.one_cell_target(f[0]), self.second.one_cell_target(f[1]))

    def hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        return list(cartesian_product(self.first.hom1(x[0], y[0]), self.second.hom1(x[1], y[1])))

    def identity1(self, x: Cell) -> Cell:
        return (self.first.identity1(x[0]), self.second.identity1(x[1]))

    def compose1(self, f: Cell, g: Cell) -> Cell:
        return (self.first.compose1(f[0], g[0]), self.second.compose1(f[1], g[1]))

    def two_cell_source(self, a: Cell) -> Cell:
        return (self.first.two_cell_source(a[0]), self.second.two_cell_source(a[1]))

    def two_cell_target(self, a: Cell) -> Cell:
        return (self.first.two_cell_target(a[0]), self.second.two_cell_target(a[1]))

    def hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        return list(cartesian_product(self.first.hom2(f[0], g[0]), self.second.hom2(f[1], g[1])))

    def identity2(self, f: Cell) -> Cell:
        return (self.first.identity2(f[0]), self.second.identity2(f[1]))

    def vertical_compose(self, a: Cell, b: Cell) -> Cell:
        return (self.first.vertical_compose(a[0], b[0]), self.second.vertical_compose(a[1], b[1]))

    def horizontal_compose(self, a: Cell, b: Cell) -> Cell:
        return (self.first.horizontal_compose(a[0], b[0]), self.second.horizontal_compose(a[1], b[1]))


def product(first: TwoGroupoid, second: TwoGroupoid, budget: SearchBudget | int | None = None) -> TableTwoGroupoid:
    """The tabulated product; `labels` hold the component pairs."""
    return tabulate(ProductTwoGroupoid(first, second), budget=budget)


def projection(product_groupoid: TableTwoGroupoid, index: int, factor: TwoGroupoid) -> TableTwoFunctor:
    """The projection of a tabulated product onto factor `index` (0 or 1)."""
    P = product_groupoid
    return TableTwoFunctor(
        P,
        factor,
        {x: P.label(0, x)[index] for x in P.objects()},
        {f: P.label(1, f)[index] for f in P.one_cells()},
        {a: P.label(2, a)[index] for a in P.two_cells()},
        name=f"pr{index}",
    )


# ---------------------------------------------------------------------------
# Transformations, modifications and the hom-2-groupoid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoNaturalTransformation:
    """η: Φ ⇒ Ψ; `eta` lists (object, η_x) pairs in object order."""

    source: int
    target: int
    eta: tuple[tuple[Cell, Cell], ...]

    def component(self, x: Cell) -> Cell:
        return dict(self.eta)[x]


@dataclass(frozen=True)
class Modification:
    """μ: η ⇛ θ; `mu` lists (object, μ_x) pairs in object order."""

    source: TwoNaturalTransformation
    target: TwoNaturalTransformation
    mu: tuple[tuple[Cell, Cell], ...]

    def component(self, x: Cell) -> Cell:
        return dict(self.mu)[x]


def enumerate_two_functors(
    source: TwoGroupoid, target: TwoGroupoid, budget: SearchBudget | int | None = None
) -> list[TableTwoFunctor]:
    """All strict 2-functors source → target, by backtracking over cell images.

    Raises:
        BudgetExceededError: If the search exceeds `budget` nodes.
    """
    budget = ensure_budget(budget, "enumerate_two_functors")
    G, H = source, target
    objects = list(G.objects())
    one_cells = list(G.one_cells())
    two_cells = list(G.two_cells())
    variables: list[tuple[int, Cell]] = (
        [(0, x) for x in objects] + [(1, f) for f in one_cells] + [(2, a) for a in two_cells]
    )
    position = {variable: index for index, variable in enumerate(variables)}

    # constraints are checked when their last variable is assigned
    checks: dict[tuple[int, Cell], list[Callable[[dict[Any, Any]], bool]]] = {v: [] for v in variables}

    def register(members: list[tuple[int, Cell]], check: Callable[[dict[Any, Any]], bool]) -> None:
        checks[max(members, key=position.__getitem__)].append(check)

    for x in objects:
        unit = G.identity1(x)
        register([(0, x), (1, unit)], lambda v, x=x, unit=unit: v[(1, unit)] == H.identity1(v[(0, x)]))
    for f in one_cells:
        unit2 = G.identity2(f)
        register([(1, f), (2, unit2)], lambda v, f=f, u=unit2: v[(2, u)] == H.identity2(v[(1, f)]))
        for g in G.one_cells_from(G.one_cell_target(f)):
            h = G.compose1(f, g)
            register(
                [(1, f), (1, g), (1, h)],
                lambda v, f=f, g=g, h=h: v[(1, h)] == H.compose1(v[(1, f)], v[(1, g)]),
            )
    two_from: dict[Cell, list[Cell]] = {}
    over_object: dict[Cell, list[Cell]] = {}
    for a in two_cells:
        two_from.setdefault(G.two_cell_source(a), []).append(a)
        over_object.setdefault(G.one_cell_source(G.two_cell_source(a)), []).append(a)
    for a in two_cells:
        for b in two_from.get(G.two_cell_target(a), []):
            c = G.vertical_compose(a, b)
            register(
                [(2, a), (2, b), (2, c)],
                lambda v, a=a, b=b, c=c: v[(2, c)] == H.vertical_compose(v[(2, a)], v[(2, b)]),
            )
        for b in over_object.get(G.one_cell_target(G.two_cell_source(a)), []):
            c = G.horizontal_compose(a, b)
            register(
                [(2, a), (2, b), (2, c)],
                lambda v, a=a, b=b, c=c: v[(2, c)] == H.horizontal_compose(v[(2, a)], v[(2, b)]),
            )

    def candidates(assignment: dict[Any, Any], variable: tuple[int, Cell]) -> Sequence[Cell]:
        dim, cell = variable
        if dim == 0:
            return H.objects()
        if dim == 1:
            return H.hom1(assignment[(0, G.one_cell_source(cell))], assignment[(0, G.one_cell_target(cell))])
        return H.hom2(assignment[(1, G.two_cell_source(cell))], assignment[(1, G.two_cell_target(cell))])

    def accept(assignment: dict[Any, Any], variable: tuple[int, Cell]) -> bool:
        return all(check(assignment) for check in checks[variable])

    functors = []
    for assignment in backtrack_assignments(variables, candidates, accept, budget):
        functors.append(
            TableTwoFunctor(
                G,
                H,
                {x: assignment[(0, x)] for x in objects},
                {f: assignment[(1, f)] for f in one_cells},
                {a: assignment[(2, a)] for a in two_cells},
                name=f"F{len(functors)}",
            )
        )
    logger.debug(f"[enumerate_two_functors] {G.name} -> {H.name}: {len(functors)} functor(s)")
    return functors


class HomTwoGroupoid(TwoGroupoid):
    """The 2-groupoid of 2-functors, 2-natural transformations and modifications.

    Objects are indices into `functors`; 1-cells are `TwoNaturalTransformation`
    values and 2-cells are `Modification` values, all computed eagerly.
    """

    def __init__(self, source: TwoGroupoid, target: TwoGroupoid, budget: SearchBudget | int | None = None) -> None:
        budget = ensure_budget(budget, "hom_2gpd")
        self.source = source
        self.target = target
        self.name = f"[{source.name},{target.name}]"
        self.functors = enumerate_two_functors(source, target, budget)
        self._source_objects = list(source.objects())
        self._source_one_cells = list(source.one_cells())
        self._source_two_cells = list(source.two_cells())

        self._hom1: dict[tuple[int, int], list[TwoNaturalTransformation]] = {}
        for i, phi in enumerate(self.functors):
            for j, psi in enumerate(self.functors):
                self._hom1[(i, j)] = self._transformations(i, phi, j, psi, budget)
        self._hom2: dict[tuple[TwoNaturalTransformation, TwoNaturalTransformation], list[Modification]] = {}
        for (i, j), transformations in self._hom1.items():
            for eta in transformations:
                for theta in transformations:
                    self._hom2[(eta, theta)] = self._modifications(eta, theta, budget)

    def _transformations(
        self, i: int, phi: TwoFunctor, j: int, psi: TwoFunctor, budget: SearchBudget
    ) -> list[TwoNaturalTransformation]:
        G, H = self.source, self.target
        objects = self._source_objects

        def candidates(assignment: dict[Any, Any], x: Cell) -> Sequence[Cell]:
            return H.hom1(phi.on_object(x), psi.on_object(x))

        def accept(assignment: dict[Any, Any], x: Cell) -> bool:
            for f in self._source_one_cells:
                src, tgt = G.one_cell_source(f), G.one_cell_target(f)
                if src not in assignment or tgt not in assignment or x not in (src, tgt):
                    continue
                # η_y∘Φf = Ψf∘η_x on 1-cells
                if H.compose1(phi.on_one_cell(f), assignment[tgt]) != H.compose1(assignment[src], psi.on_one_cell(f)):
                    return False
                for g in G.parallel_one_cells(f):
                    for a in G.hom2(f, g):
                        # 1_{η_y}∘Φa = Ψa∘1_{η_x}
                        left = H.whisker_after(phi.on_two_cell(a), assignment[tgt])
                        right = H.whisker_before(assignment[src], psi.on_two_cell(a))
                        if left != right:
                            return False
            return True

        return [
            TwoNaturalTransformation(i, j, tuple((x, assignment[x]) for x in objects))
            for assignment in backtrack_assignments(objects, candidates, accept, budget)
        ]

    def _modifications(
        self, eta: TwoNaturalTransformation, theta: TwoNaturalTransformation, budget: SearchBudget
    ) -> list[Modification]:
        G, H = self.source, self.target
        phi, psi = self.functors[eta.source], self.functors[eta.target]
        objects = self._source_objects
        eta_map, theta_map = dict(eta.eta), dict(theta.eta)

        def candidates(assignment: dict[Any, Any], x: Cell) -> Sequence[Cell]:
            return H.hom2(eta_map[x], theta_map[x])

        def accept(assignment: dict[Any, Any], x: Cell) -> bool:
            for f in self._source_one_cells:
                src, tgt = G.one_cell_source(f), G.one_cell_target(f)
                if src not in assignment or tgt not in assignment or x not in (src, tgt):
                    continue
                # μ_y∘1_{Φf} = 1_{Ψf}∘μ_x
                left = H.whisker_before(phi.on_one_cell(f), assignment[tgt])
                right = H.whisker_after(assignment[src], psi.on_one_cell(f))
                if left != right:
                    return False
            return True

        return [
            Modification(eta, theta, tuple((x, assignment[x]) for x in objects))
            for assignment in backtrack_assignments(objects, candidates, accept, budget)
        ]

    def objects(self) -> Sequence[Cell]:
        return list(range(len(self.functors)))

    def one_cell_source(self, f: Cell) -> Cell:
        return f.source

    def one_cell_target(self, f: Cell) -> Cell:
        return f.target

    def hom1(self, x: Cell, y: Cell) -> Sequence[Cell]:
        return self._hom1.get((x, y), [])

    def identity1(self, x: Cell) -> Cell:
        phi = self.functors[x]
        return TwoNaturalTransformation(
            x, x, tuple((o, self.target.identity1(phi.on_object(o))) for o in self._source_objects)
        )

    def compose1(self, f: Cell, g: Cell) -> Cell:
        if f.target != g.source:
            raise CompositionError("1-cell", f, g)
        first, second = dict(f.eta), dict(g.eta)
        return TwoNaturalTransformation(
            f.source, g.target, tuple((o, self.target.compose1(first[o], second[o])) for o in self._source_objects)
        )

    def two_cell_source(self, a: Cell) -> Cell:
        return a.source

    def two_cell_target(self, a: Cell) -> Cell:
        return a.target

    def hom2(self, f: Cell, g: Cell) -> Sequence[Cell]:
        return self._hom2.get((f, g), [])

    def identity2(self, f: Cell) -> Cell:
        components = dict(f.eta)
        return Modification(f, f, tuple((o, self.target.identity2(components[o])) for o in self._source_objects))

    def vertical_compose(self, a: Cell, b: Cell) -> Cell:
        if a.target != b.source:
            raise CompositionError("vertical", a, b)
        first, second = dict(a.mu), dict(b.mu)
        return Modification(
            a.source,
            b.target,
            tuple((o, self.target.vertical_compose(first[o], second[o])) for o in self._source_objects),
        )

    def horizontal_compose(self, a: Cell, b: Cell) -> Cell:
        first, second = dict(a.mu), dict(b.mu)
        return Modification(
            self.compose1(a.source, b.source),
            self.compose1(a.target, b.target),
            tuple((o, self.target.horizontal_compose(first[o], second[o])) for o in self._source_objects),
        )


def hom_2gpd(
    source: TwoGroupoid, target: TwoGroupoid, budget: SearchBudget | int | None = None
) -> TableTwoGroupoid:
    """The internal hom: functors, 2-natural transformations, modifications.

    Raises:
        BudgetExceededError: If enumerating any of the three levels exceeds `budget`.
    """
    budget = ensure_budget(budget, "hom_2gpd")
    hom = HomTwoGroupoid(source, target, budget)
    table = tabulate(hom, budget=budget, name=hom.name)
    logger.info(f"[hom_2gpd] {hom.name}: cells {table.cell_counts()}")
    return table
