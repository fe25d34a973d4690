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

"""Restricted cosimplicial 2-groupoids truncated to degrees 0..3, and their
level-wise nerves. There are cofaces only; codegeneracies are not represented.
"""

import logging
from collections.abc import Callable, Hashable, Mapping, Sequence
from typing import Any

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import CofaceCompatibilityError, StructuralError
from app.tools.nerve import SimplicialMap, TwoNerve, nerve_of_functor, two_nerve
from app.tools.simplicial_set import CoskeletalSSet
from app.tools.two_groupoid import (
    TableTwoGroupoid,
    TwoFunctor,
    TwoGroupoid,
    ValidationReport,
    identity_functor,
    validate_two_functor,
    validate_two_groupoid,
)

logger = logging.getLogger(__name__)

TOP_DEGREE = 3


def coface_keys() -> list[tuple[int, int]]:
    """(n, i) for every coface d^i: degree n-1 → degree n."""
    return [(n, i) for n in range(1, TOP_DEGREE + 1) for i in range(n + 1)]


def identity_pairs() -> list[tuple[int, int, int]]:
    """(n, i, j) for every identity d^j d^i = d^i d^{j-1} landing in degree n, i < j."""
    return [(n, i, j) for n in range(2, TOP_DEGREE + 1) for j in range(n + 1) for i in range(j)]


class RestrictedCosimplicial2Groupoid:
    """Levels G⁰..G³ and coface 2-functors d^i: G^{n-1} → G^n.

    Raises:
        StructuralError: If a coface is missing or does not run between the
            levels it is declared on.
    """

    def __init__(
        self,
        levels: Sequence[TwoGroupoid],
        cofaces: Mapping[tuple[int, int], TwoFunctor],
        name: str = "G",
    ) -> None:
        if len(levels) != TOP_DEGREE + 1:
            raise StructuralError(f"{name}: expected {TOP_DEGREE + 1} levels, got {len(levels)}")
        self.levels = tuple(levels)
        self.cofaces = dict(cofaces)
        self.name = name
        for n, i in coface_keys():
            functor = self.cofaces.get((n, i))
            if functor is None:
                raise StructuralError(f"{name}: coface d^{i} into degree {n} is missing")
            if functor.source is not self.levels[n - 1] or functor.target is not self.levels[n]:
                raise StructuralError(f"{name}: coface d^{i} into degree {n} has mismatched levels")

    def __repr__(self) -> str:
        return f"RestrictedCosimplicial2Groupoid({self.name})"

    def coface(self, n: int, i: int) -> TwoFunctor:
        return self.cofaces[(n, i)]

    def level(self, n: int) -> TwoGroupoid:
        return self.levels[n]

    def with_coface(self, n: int, i: int, functor: TwoFunctor) -> "RestrictedCosimplicial2Groupoid":
        cofaces = dict(self.cofaces)
        cofaces[(n, i)] = functor
        return RestrictedCosimplicial2Groupoid(self.levels, cofaces, name=f"{self.name}[d{i}@{n}]")


def constant_cosimplicial(groupoid: TwoGroupoid) -> RestrictedCosimplicial2Groupoid:
    """Every level is G and every coface is the identity."""
    identity = identity_functor(groupoid)
    return RestrictedCosimplicial2Groupoid(
        [groupoid] * (TOP_DEGREE + 1), {key: identity for key in coface_keys()}, name=f"const({groupoid.name})"
    )


def _index_composite(first: TwoFunctor, second: TwoFunctor) -> tuple[int, ...] | None:
    """Positions of second∘first when both are reindexings, else None."""
    first_positions = getattr(first, "positions", None)
    second_positions = getattr(second, "positions", None)
    if first_positions is None or second_positions is None:
        return None
    return tuple(first_positions[p] for p in second_positions)


def _generating_cells(
    level: TwoGroupoid, budget: SearchBudget
) -> tuple[list[Hashable], list[Hashable], list[Hashable]]:
    objects = list(level.objects())
    budget.spend(len(objects))
    one_cells = [f for x in objects for f in level.generating_one_cells_from(x)]
    budget.spend(len(one_cells))
    two_cells = [a for f in one_cells for a in level.generating_two_cells_from(f)]
    budget.spend(len(two_cells))
    return objects, one_cells, two_cells


def functors_agree(
    first: Callable[[int, Hashable], Hashable],
    second: Callable[[int, Hashable], Hashable],
    level: TwoGroupoid,
    budget: SearchBudget,
) -> tuple[int, Hashable] | None:
    """First (dimension, cell) on which two 2-functors out of `level` differ.

    Strict 2-functors agreeing on objects, generating 1-cells and generating
    2-cells agree everywhere, so only those are compared.
    """
    for dim, cells in enumerate(_generating_cells(level, budget)):
        for cell in cells:
            if first(dim, cell) != second(dim, cell):
                return dim, cell
    return None


def apply_functor(functor: TwoFunctor, dim: int, cell: Hashable) -> Hashable:
    if dim == 0:
        return functor.on_object(cell)
    if dim == 1:
        return functor.on_one_cell(cell)
    return functor.on_two_cell(cell)


def validate_cosimplicial(
    cosimplicial: RestrictedCosimplicial2Groupoid,
    budget: SearchBudget | int | None = None,
    check_levels: bool = True,
) -> ValidationReport:
    """Scans the cosimplicial identities d^j d^i = d^i d^{j-1} (i < j).

    With `check_levels`, table levels and table cofaces are validated as well;
    indexed powers are validated through their base 2-groupoid.
    """
    budget = ensure_budget(budget, "validate_cosimplicial")
    C = cosimplicial
    report = ValidationReport(C.name)
    if check_levels:
        seen: set[int] = set()
        for n, level in enumerate(C.levels):
            base = getattr(level, "base", None)
            subject = base if base is not None else level
            if id(subject) in seen or not isinstance(subject, TableTwoGroupoid):
                continue
            seen.add(id(subject))
            for violation in validate_two_groupoid(subject, budget).violations:
                report.add(violation.family, f"level {n}: {violation.detail}")
        for (n, i), functor in C.cofaces.items():
            if isinstance(functor.source, TableTwoGroupoid) and isinstance(functor.target, TableTwoGroupoid):
                for violation in validate_two_functor(functor, budget).violations:
                    report.add(violation.family, f"d^{i} into {n}: {violation.detail}")

    for n, i, j in identity_pairs():
        left_first, left_second = C.coface(n - 1, i), C.coface(n, j)
        right_first, right_second = C.coface(n - 1, j - 1), C.coface(n, i)
        left_positions = _index_composite(left_first, left_second)
        right_positions = _index_composite(right_first, right_second)
        if left_positions is not None and right_positions is not None:
            budget.spend()
            if left_positions != right_positions:
                report.add("cosimplicial_identity", f"(i,j)=({i},{j}) into degree {n}: index maps differ")
            continue
        mismatch = functors_agree(
            lambda dim, cell, a=left_first, b=left_second: apply_functor(b, dim, apply_functor(a, dim, cell)),
            lambda dim, cell, a=right_first, b=right_second: apply_functor(b, dim, apply_functor(a, dim, cell)),
            C.level(n - 2),
            budget,
        )
        if mismatch is not None:
            report.add(
                "cosimplicial_identity",
                f"(i,j)=({i},{j}) into degree {n}: differs on {mismatch[1]!r} (dimension {mismatch[0]})",
            )
    logger.debug(f"[validate_cosimplicial] {C.name}: {len(report.violations)} violation(s)")
    return report


class LevelwiseMap:
    """A map of restricted cosimplicial 2-groupoids: one 2-functor per degree."""

    def __init__(
        self,
        source: RestrictedCosimplicial2Groupoid,
        target: RestrictedCosimplicial2Groupoid,
        components: Sequence[TwoFunctor],
        name: str = "phi",
    ) -> None:
        if len(components) != TOP_DEGREE + 1:
            raise StructuralError(f"{name}: expected {TOP_DEGREE + 1} components, got {len(components)}")
        self.source = source
        self.target = target
        self.components = tuple(components)
        self.name = name

    def component(self, n: int) -> TwoFunctor:
        return self.components[n]

    def check_compatibility(self, budget: SearchBudget | int | None = None) -> None:
        """Checks φⁿ∘d^i = d^i∘φⁿ⁻¹ on generators of every level.

        Raises:
            CofaceCompatibilityError: For the first coface that does not commute.
        """
        budget = ensure_budget(budget, "levelwise_map")
        for n, i in coface_keys():
            along_source = self.source.coface(n, i)
            along_target = self.target.coface(n, i)
            mismatch = functors_agree(
                lambda dim, cell, n=n, d=along_source: apply_functor(self.components[n], dim, apply_functor(d, dim, cell)),
                lambda dim, cell, n=n, d=along_target: apply_functor(d, dim, apply_functor(self.components[n - 1], dim, cell)),
                self.source.level(n - 1),
                budget,
            )
            if mismatch is not None:
                raise CofaceCompatibilityError(n, i, f"{self.name} differs on {mismatch[1]!r}")


# ---------------------------------------------------------------------------
# Level-wise nerves
# ---------------------------------------------------------------------------


class RestrictedCosimplicialSSet:
    """Levels X⁰..X³ (3-coskeletal) with simplicial coface maps."""

    def __init__(
        self,
        levels: Sequence[CoskeletalSSet],
        cofaces: Mapping[tuple[int, int], SimplicialMap],
        name: str = "X",
        source: Any = None,
    ) -> None:
        if len(levels) != TOP_DEGREE + 1:
            raise StructuralError(f"{name}: expected {TOP_DEGREE + 1} levels, got {len(levels)}")
        missing = [key for key in coface_keys() if key not in cofaces]
        if missing:
            raise StructuralError(f"{name}: cofaces {missing} are missing")
        self.levels = tuple(levels)
        self.cofaces = dict(cofaces)
        self.name = name
        self.source = source

    def coface(self, n: int, i: int) -> SimplicialMap:
        return self.cofaces[(n, i)]

    def level(self, n: int) -> CoskeletalSSet:
        return self.levels[n]


def levelwise_nerve(cosimplicial: RestrictedCosimplicial2Groupoid) -> RestrictedCosimplicialSSet:
    """Applies the 2-nerve in every degree; `source` keeps the 2-groupoid side."""
    C = cosimplicial
    nerves: list[TwoNerve] = []
    for level in C.levels:
        # levels shared between degrees (constant objects) share one nerve
        existing = next((nerve for nerve in nerves if nerve.groupoid is level), None)
        nerves.append(existing or two_nerve(level))
    cofaces = {}
    for (n, i), functor in C.cofaces.items():
        nerve_map = nerve_of_functor(functor)
        nerve_map.source, nerve_map.target = nerves[n - 1], nerves[n]
        cofaces[(n, i)] = nerve_map
    return RestrictedCosimplicialSSet(nerves, cofaces, name=f"N({C.name})", source=C)


def validate_cosimplicial_sset(
    cosimplicial: RestrictedCosimplicialSSet, budget: SearchBudget | int | None = None
) -> ValidationReport:
    """Scans d^j d^i = d^i d^{j-1} on every simplex of levels 0..3."""
    budget = ensure_budget(budget, "validate_cosimplicial_sset")
    X = cosimplicial
    report = ValidationReport(X.name)
    for n, i, j in identity_pairs():
        source = X.level(n - 2)
        for dim in range(4):
            for simplex in source.simplices(dim):
                budget.spend()
                left = X.coface(n, j)(dim, X.coface(n - 1, i)(dim, simplex))
                right = X.coface(n, i)(dim, X.coface(n - 1, j - 1)(dim, simplex))
                if left != right:
                    report.add(
                        "cosimplicial_identity", f"(i,j)=({i},{j}) into degree {n} on {dim}-simplex {simplex!r}"
                    )
    return report
