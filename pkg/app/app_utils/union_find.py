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

"""Deterministic disjoint-set forest."""

from collections import Counter
from collections.abc import Hashable, Iterable, Sequence
from typing import Any


class UnionFind:
    """Disjoint sets with union by rank and path compression.

    Class listings are deterministic: every class is reported in the order its
    members were registered, and classes are ordered by their first member.

    Examples
    --------
    >>> uf = UnionFind([1, 2, 3, 4])
    >>> uf.union(2, 3)
    >>> uf.classes()
    [[1], [2, 3], [4]]
    """

    def __init__(self, elements: Iterable[Hashable] = ()) -> None:
        self.parent: dict[Any, Any] = {}
        self.rank: Counter[Any] = Counter()
        self.order: dict[Any, int] = {}
        for element in elements:
            self.add(element)

    def add(self, element: Hashable) -> None:
        if element not in self.parent:
            self.parent[element] = element
            self.order[element] = len(self.order)

    def find(self, element: Hashable) -> Any:
        self.add(element)
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def union(self, first: Hashable, second: Hashable) -> None:
        root_first = self.find(first)
        root_second = self.find(second)
        if root_first == root_second:
            return
        if self.rank[root_first] < self.rank[root_second]:
            root_first, root_second = root_second, root_first
        self.parent[root_second] = root_first
        if self.rank[root_first] == self.rank[root_second]:
            self.rank[root_first] += 1

    def connected(self, first: Hashable, second: Hashable) -> bool:
        return self.find(first) == self.find(second)

    def classes(self) -> list[list[Any]]:
        grouped: dict[Any, list[Any]] = {}
        for element in sorted(self.parent, key=self.order.__getitem__):
            grouped.setdefault(self.find(element), []).append(element)
        return list(grouped.values())


def partition_key(classes: Sequence[Sequence[Hashable]]) -> frozenset[frozenset[Any]]:
    """Order-free form of a partition, for set equality of partitions."""
    return frozenset(frozenset(block) for block in classes)
