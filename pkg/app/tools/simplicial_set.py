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

"""3-coskeletal simplicial sets stored through dimension 3.

Only levels 0..3 are ever materialized. Level 4 is the set of boundary-compatible
5-tuples of 3-simplices, and every higher level is determined by it, so a
simplicial set here is 3-coskeletal by construction.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any

from app.app_utils.budget import SearchBudget, ensure_budget
from app.app_utils.errors import StructuralError
from app.app_utils.union_find import UnionFind
from app.tools.two_groupoid import ValidationReport

logger = logging.getLogger(__name__)

Simplex = Hashable
TOP_LEVEL = 3


class CoskeletalSSet(ABC):
    """A 3-coskeletal simplicial set, described by its 3-truncation."""

    name: str = "X"

    @abstractmethod
    def simplices(self, n: int) -> Sequence[Simplex]:
        """Simplices of dimension n (0 ≤ n ≤ 3), in a fixed order."""

    @abstractmethod
    def face(self, n: int, i: int, simplex: Simplex) -> Simplex:
        """d_i of an n-simplex."""

    @abstractmethod
    def degeneracy(self, n: int, i: int, simplex: Simplex) -> Simplex:
        """s_i of an n-simplex (n ≤ 2)."""

    def boundary(self, n: int, simplex: Simplex) -> tuple[Simplex, ...]:
        return tuple(self.face(n, i, simplex) for i in range(n + 1))

    def fillers(self, n: int, boundary: Sequence[Simplex]) -> list[Simplex]:
        """All n-simplices whose faces are `boundary` (all vertices when n = 0)."""
        if n == 0:
            return list(self.simplices(0))
        index = self._face_index(n, 0)
        return [s for s in index.get(boundary[0], []) if self.boundary(n, s) == tuple(boundary)]

    def is_filler(self, n: int, boundary: Sequence[Simplex], simplex: Simplex) -> bool:
        return simplex in self.fillers(n, boundary)

    def horn_fillers(self, n: int, k: int, horn: Sequence[Simplex | None]) -> list[Simplex]:
        """n-simplices whose i-th face is horn[i] for every i ≠ k."""
        return self.simplices_with_faces(n, {i: face for i, face in enumerate(horn) if i != k})

    def simplices_with_faces(self, n: int, known: Mapping[int, Simplex]) -> list[Simplex]:
        """n-simplices whose i-th face equals known[i] for every given i."""
        if not known:
            return list(self.simplices(n))
        first = min(known)
        candidates = self._face_index(n, first).get(known[first], [])
        return [s for s in candidates if all(self.face(n, i, s) == face for i, face in known.items())]

    def _face_index(self, n: int, i: int) -> dict[Simplex, list[Simplex]]:
        cache = self.__dict__.setdefault("_face_index_cache", {})
        if (n, i) not in cache:
            index: dict[Simplex, list[Simplex]] = {}
            for s in self.simplices(n):
                index.setdefault(self.face(n, i, s), []).append(s)
            cache[(n, i)] = index
        return cache[(n, i)]

    def level_counts(self) -> tuple[int, int, int, int]:
        return tuple(len(self.simplices(n)) for n in range(TOP_LEVEL + 1))  # type: ignore[return-value]

    def is_degenerate(self, n: int, simplex: Simplex) -> bool:
        if n == 0:
            return False
        return any(self.degeneracy(n - 1, i, self.face(n, i, simplex)) == simplex for i in range(n))


class FiniteCoskSSet(CoskeletalSSet):
    """Table implementation: explicit simplices, faces and degeneracies.

    Args:
        levels: Simplex lists for dimensions 0..3.
        faces: (n, i) → {simplex: face}, for n = 1..3 and i = 0..n.
        degens: (n, i) → {simplex: degenerate simplex}, for n = 0..2 and i = 0..n.

    Raises:
        StructuralError: If a table is missing or refers to unknown simplices.
    """

    def __init__(
        self,
        levels: Sequence[Sequence[Simplex]],
        faces: Mapping[tuple[int, int], Mapping[Simplex, Simplex]],
        degens: Mapping[tuple[int, int], Mapping[Simplex, Simplex]],
        name: str = "X",
    ) -> None:
        if len(levels) != TOP_LEVEL + 1:
            raise StructuralError(f"expected {TOP_LEVEL + 1} levels, got {len(levels)}")
        self.name = name
        self._levels = [list(level) for level in levels]
        self._faces = {key: dict(table) for key, table in faces.items()}
        self._degens = {key: dict(table) for key, table in degens.items()}
        self._check_structure()

    def _check_structure(self) -> None:
        members = [set(level) for level in self._levels]
        for n in range(1, TOP_LEVEL + 1):
            for i in range(n + 1):
                table = self._faces.get((n, i))
                if table is None:
                    raise StructuralError(f"{self.name}: face table d_{i} on level {n} is missing")
                for s in self._levels[n]:
                    if table.get(s) not in members[n - 1]:
                        raise StructuralError(f"{self.name}: d_{i} of {s!r} is dangling")
        for n in range(TOP_LEVEL):
            for i in range(n + 1):
                table = self._degens.get((n, i))
                if table is None:
                    raise StructuralError(f"{self.name}: degeneracy table s_{i} on level {n} is missing")
                for s in self._levels[n]:
                    if table.get(s) not in members[n + 1]:
                        raise StructuralError(f"{self.name}: s_{i} of {s!r} is dangling")

    def __repr__(self) -> str:
        return f"FiniteCoskSSet({self.name}, levels={self.level_counts()})"

    def simplices(self, n: int) -> Sequence[Simplex]:
        return self._levels[n]

    def face(self, n: int, i: int, simplex: Simplex) -> Simplex:
        return self._faces[(n, i)][simplex]

    def degeneracy(self, n: int, i: int, simplex: Simplex) -> Simplex:
        return self._degens[(n, i)][simplex]

    def truncation(self) -> dict[str, Any]:
        """The stored 3-truncation: levels and the face/degeneracy tables."""
        return {
            "levels": [list(level) for level in self._levels],
            "faces": {key: dict(table) for key, table in self._faces.items()},
            "degens": {key: dict(table) for key, table in self._degens.items()},
        }

    def with_face(self, n: int, i: int, simplex: Simplex, image: Simplex) -> "FiniteCoskSSet":
        """A copy with one face pointer rewired."""
        faces = {key: dict(table) for key, table in self._faces.items()}
        faces[(n, i)][simplex] = image
        return FiniteCoskSSet(self._levels, faces, self._degens, name=f"{self.name}[d{i}]")

    def without_simplex(self, n: int, simplex: Simplex) -> "FiniteCoskSSet":
        """A copy with a non-degenerate simplex removed, together with its cofaces.

        Raises:
            StructuralError: If the simplex is degenerate or n is 0.
        """
        if n == 0 or self.is_degenerate(n, simplex):
            raise StructuralError(f"{simplex!r} cannot be removed from {self.name}")
        removed = [set() for _ in range(TOP_LEVEL + 1)]
        removed[n].add(simplex)
        for level in range(n + 1, TOP_LEVEL + 1):
            for s in self._levels[level]:
                if any(self.face(level, i, s) in removed[level - 1] for i in range(level + 1)):
                    removed[level].add(s)
        levels = [[s for s in level if s not in removed[dim]] for dim, level in enumerate(self._levels)]
        faces = {
            key: {s: image for s, image in table.items() if s not in removed[key[0]]}
            for key, table in self._faces.items()
        }
        degens = {
            key: {s: image for s, image in table.items() if s not in removed[key[0]]}
            for key, table in self._degens.items()
        }
        return FiniteCoskSSet(levels, faces, degens, name=f"{self.name}-{simplex!r}")


def materialize(sset: CoskeletalSSet, budget: SearchBudget | int | None = None) -> FiniteCoskSSet:
    """Copies any 3-coskeletal simplicial set into tables."""
    budget = ensure_budget(budget, "materialize")
    levels = []
    for n in range(TOP_LEVEL + 1):
        level = list(sset.simplices(n))
        budget.spend(len(level))
        levels.append(level)
    faces = {(n, i): {s: sset.face(n, i, s) for s in levels[n]} for n in range(1, TOP_LEVEL + 1) for i in range(n + 1)}
    degens = {(n, i): {s: sset.degeneracy(n, i, s) for s in levels[n]} for n in range(TOP_LEVEL) for i in range(n + 1)}
    return FiniteCoskSSet(levels, faces, degens, name=sset.name)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_sset(sset: CoskeletalSSet, budget: SearchBudget | int | None = None) -> ValidationReport:
    """Scans the simplicial identities on levels 0..3.

    Every failure is reported under `simplicial_identity` with the identity and
    the offending simplex.
    """
    budget = ensure_budget(budget, "validate_sset")
    X = sset
    report = ValidationReport(X.name)

    def check(label: str, simplex: Simplex, left: Simplex, right: Simplex) -> None:
        budget.spend()
        if left != right:
            report.add("simplicial_identity", f"{label} on {simplex!r}: {left!r} != {right!r}")

    for n in range(2, TOP_LEVEL + 1):
        for s in X.simplices(n):
            for j in range(n + 1):
                for i in range(j):
                    check(
                        f"d{i}d{j} = d{j - 1}d{i} (level {n})",
                        s,
                        X.face(n - 1, i, X.face(n, j, s)),
                        X.face(n - 1, j - 1, X.face(n, i, s)),
                    )
    for n in range(TOP_LEVEL):
        for s in X.simplices(n):
            for j in range(n + 1):
                lifted = X.degeneracy(n, j, s)
                check(f"d{j}s{j} = id (level {n})", s, X.face(n + 1, j, lifted), s)
                check(f"d{j + 1}s{j} = id (level {n})", s, X.face(n + 1, j + 1, lifted), s)
                if n == 0:
                    continue
                for i in range(j):
                    check(
                        f"d{i}s{j} = s{j - 1}d{i} (level {n})",
                        s,
                        X.face(n + 1, i, lifted),
                        X.degeneracy(n - 1, j - 1, X.face(n, i, s)),
                    )
                for i in range(j + 2, n + 2):
                    check(
                        f"d{i}s{j} = s{j}d{i - 1} (level {n})",
                        s,
                        X.face(n + 1, i, lifted),
                        X.degeneracy(n - 1, j, X.face(n, i - 1, s)),
                    )
    for n in range(TOP_LEVEL - 1):
        for s in X.simplices(n):
            for j in range(n + 1):
                for i in range(j + 1):
                    check(
                        f"s{i}s{j} = s{j + 1}s{i} (level {n})",
                        s,
                        X.degeneracy(n + 1, i, X.degeneracy(n, j, s)),
                        X.degeneracy(n + 1, j + 1, X.degeneracy(n, i, s)),
                    )
    logger.debug(f"[validate_sset] {X.name}: {len(report.violations)} violation(s)")
    return report


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def standard_simplex(n: int) -> FiniteCoskSSet:
    """Δⁿ: k-simplices are weakly increasing (k+1)-tuples in {0..n}."""
    if not 0 <= n <= TOP_LEVEL:
        raise ValueError(f"standard_simplex supports 0 <= n <= {TOP_LEVEL}, got {n}")
    levels = [list(combinations_with_replacement(range(n + 1), k + 1)) for k in range(TOP_LEVEL + 1)]
    faces = {
        (k, i): {s: s[:i] + s[i + 1 :] for s in levels[k]} for k in range(1, TOP_LEVEL + 1) for i in range(k + 1)
    }
    degens = {(k, i): {s: s[: i + 1] + s[i:] for s in levels[k]} for k in range(TOP_LEVEL) for i in range(k + 1)}
    return FiniteCoskSSet(levels, faces, degens, name=f"Delta{n}")


def sset_product(first: CoskeletalSSet, second: CoskeletalSSet, budget: SearchBudget | int | None = None) -> FiniteCoskSSet:
    """Level-wise product with diagonal faces and degeneracies."""
    budget = ensure_budget(budget, "sset_product")
    levels = []
    for n in range(TOP_LEVEL + 1):
        level = [(s, t) for s in first.simplices(n) for t in second.simplices(n)]
        budget.spend(len(level))
        levels.append(level)
    faces = {
        (n, i): {p: (first.face(n, i, p[0]), second.face(n, i, p[1])) for p in levels[n]}
        for n in range(1, TOP_LEVEL + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {p: (first.degeneracy(n, i, p[0]), second.degeneracy(n, i, p[1])) for p in levels[n]}
        for n in range(TOP_LEVEL)
        for i in range(n + 1)
    }
    return FiniteCoskSSet(levels, faces, degens, name=f"{first.name}x{second.name}")


def sset_disjoint_union(first: CoskeletalSSet, second: CoskeletalSSet) -> FiniteCoskSSet:
    """X ⊔ Y with simplices tagged 0 and 1."""
    parts = (first, second)
    levels = [[(tag, s) for tag, part in enumerate(parts) for s in part.simplices(n)] for n in range(TOP_LEVEL + 1)]
    faces = {
        (n, i): {(tag, s): (tag, parts[tag].face(n, i, s)) for tag, s in levels[n]}
        for n in range(1, TOP_LEVEL + 1)
        for i in range(n + 1)
    }
    degens = {
        (n, i): {(tag, s): (tag, parts[tag].degeneracy(n, i, s)) for tag, s in levels[n]}
        for n in range(TOP_LEVEL)
        for i in range(n + 1)
    }
    return FiniteCoskSSet(levels, faces, degens, name=f"{first.name}+{second.name}")


def level4_simplices(sset: CoskeletalSSet, budget: SearchBudget | int | None = None) -> list[tuple[Simplex, ...]]:
    """The 4-simplices of the 3-coskeleton: 5-tuples (t₀..t₄) of 3-simplices with
    d_i t_j = d_{j-1} t_i for all i < j.
    """
    budget = ensure_budget(budget, "level4_simplices")
    return list(_matching_families(sset, 4, {}, budget))


def _matching_families(
    sset: CoskeletalSSet, n: int, fixed: Mapping[int, Simplex], budget: SearchBudget, skip: int | None = None
) -> Iterator[tuple[Simplex, ...]]:
    """Compatible families (y_0..y_n) of (n-1)-simplices, with optional fixed
    entries and an optional position `skip` that stays unassigned (a horn).
    """
    X = sset
    positions = [j for j in range(n + 1) if j != skip]
    chosen: dict[int, Simplex] = {}

    def known_faces(j: int) -> dict[int, Simplex]:
        # d_i y_j = d_{j-1} y_i for i < j and d_{i} y_j = d_j y_{i+1} for i >= j
        known: dict[int, Simplex] = {}
        if n == 1:
            return known
        for i in range(j):
            if i in chosen:
                known[i] = X.face(n - 1, j - 1, chosen[i])
        for i in range(j, n):
            if i + 1 in chosen:
                known[i] = X.face(n - 1, j, chosen[i + 1])
        return known

    def extend(position: int) -> Iterator[tuple[Simplex, ...]]:
        if position == len(positions):
            yield tuple(chosen.get(j) for j in range(n + 1))
            return
        j = positions[position]
        known = known_faces(j)
        candidates = [fixed[j]] if j in fixed else X.simplices_with_faces(n - 1, known)
        for candidate in candidates:
            budget.spend()
            if j in fixed and any(X.face(n - 1, i, candidate) != face for i, face in known.items()):
                continue
            chosen[j] = candidate
            yield from extend(position + 1)
            del chosen[j]

    yield from extend(0)


# ---------------------------------------------------------------------------
# Kan condition
# ---------------------------------------------------------------------------


@dataclass
class KanReport:
    """Horns Λⁿ_k without a filler, with the number of horns checked per dimension."""

    name: str
    dim_max: int
    unfillable: list[tuple[int, int, tuple[Simplex, ...]]] = field(default_factory=list)
    horns_checked: dict[int, int] = field(default_factory=dict)

    @property
    def is_kan(self) -> bool:
        return not self.unfillable

    def summary(self) -> str:
        lines = [f"{self.name}: horns checked {self.horns_checked}, unfillable {len(self.unfillable)}"]
        if self.dim_max >= 4:
            lines.append("dimensions >= 5 fill uniquely in a 3-coskeletal simplicial set")
        lines.extend(f"  Lambda^{n}_{k}: {horn!r}" for n, k, horn in self.unfillable)
        return "\n".join(lines)


def kan_check(sset: CoskeletalSSet, dim_max: int = 4, budget: SearchBudget | int | None = None) -> KanReport:
    """Enumerates every horn Λⁿ_k, 1 ≤ n ≤ dim_max, and searches for a filler.

    Raises:
        ValueError: If dim_max is outside 1..4.
        BudgetExceededError: If the horn search exceeds `budget`.
    """
    if not 1 <= dim_max <= 4:
        raise ValueError(f"dim_max must lie in 1..4, got {dim_max}")
    budget = ensure_budget(budget, "kan_check")
    X = sset
    report = KanReport(X.name, dim_max)
    for n in range(1, dim_max + 1):
        checked = 0
        for k in range(n + 1):
            for horn in _matching_families(X, n, {}, budget, skip=k):
                checked += 1
                if not _has_filler(X, n, k, horn, budget):
                    report.unfillable.append((n, k, horn))
        report.horns_checked[n] = checked
    logger.info(f"[kan_check] {X.name}: {report.horns_checked} horns, {len(report.unfillable)} unfillable")
    return report


def _has_filler(sset: CoskeletalSSet, n: int, k: int, horn: tuple[Simplex, ...], budget: SearchBudget) -> bool:
    given = {j: face for j, face in enumerate(horn) if j != k}
    if n == 4:
        # a filler is any 3-simplex completing the family
        return any(True for _ in _matching_families(sset, 4, given, budget))
    budget.spend()
    return bool(sset.simplices_with_faces(n, given))


def sset_pi0(sset: CoskeletalSSet) -> list[list[Simplex]]:
    """Vertices modulo the equivalence relation generated by d₁e ~ d₀e."""
    uf = UnionFind(sset.simplices(0))
    for edge in sset.simplices(1):
        uf.union(sset.face(1, 1, edge), sset.face(1, 0, edge))
    return uf.classes()


def describe(sset: CoskeletalSSet, tables: bool = False) -> str:
    """Plain-text export: counts per level and, optionally, the face tables."""
    lines = [f"{sset.name}: " + " ".join(f"level{n}={count}" for n, count in enumerate(sset.level_counts()))]
    if tables:
        for n in range(1, TOP_LEVEL + 1):
            for s in sset.simplices(n):
                faces = " ".join(repr(sset.face(n, i, s)) for i in range(n + 1))
                lines.append(f"  {n} {s!r} -> {faces}")
    return "\n".join(lines)
