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

"""Finite groups given by multiplication tables."""

from collections.abc import Sequence
from functools import cached_property

import numpy as np

from app.app_utils.errors import StructuralError


class FiniteGroup:
    """A finite group on the elements 0..n-1.

    `table[a][b]` is the product a·b. The table is validated on construction
    (closure, associativity, identity, inverses), so every instance is a group.

    Args:
        table: Square multiplication table.
        name: Human-readable name used in reports.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = "") -> None:
        array = np.asarray(table, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise StructuralError(f"group table must be a non-empty square, got shape {array.shape}")
        order = array.shape[0]
        if array.min() < 0 or array.max() >= order:
            raise StructuralError("group table refers to elements outside 0..n-1")
        if not np.array_equal(array[array, :], array[:, array]):
            raise StructuralError(f"group table {name or ''} is not associative")
        identities = [e for e in range(order) if np.array_equal(array[e], np.arange(order))]
        if not identities or not np.array_equal(array[:, identities[0]], np.arange(order)):
            raise StructuralError(f"group table {name or ''} has no two-sided identity")
        identity = identities[0]
        for row in array:
            if identity not in row:
                raise StructuralError(f"group table {name or ''} has a non-invertible element")
        self.table = array
        self.identity = identity
        self.name = name or f"G{order}"

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def _inverses(self) -> tuple[int, ...]:
        return tuple(int(np.flatnonzero(self.table[a] == self.identity)[0]) for a in self.elements)

    def inverse(self, a: int) -> int:
        return self._inverses[a]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def element_order(self, a: int) -> int:
        power, steps = a, 1
        while power != self.identity:
            power = self.multiply(power, a)
            steps += 1
        return steps

    def is_homomorphism(self, target: "FiniteGroup", images: Sequence[int]) -> bool:
        """True iff `a -> images[a]` respects the products of both tables."""
        mapped = np.asarray(images, dtype=np.int64)
        return bool(np.array_equal(mapped[self.table], target.table[np.ix_(mapped, mapped)]))

    @classmethod
    def cyclic(cls, order: int) -> "FiniteGroup":
        if order <= 0:
            raise ValueError(f"cyclic group order must be positive, got {order}")
        residues = np.arange(order)
        return cls((residues[:, None] + residues[None, :]) % order, name=f"Z/{order}")

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls([[0]], name="1")

    @classmethod
    def direct_product(cls, first: "FiniteGroup", second: "FiniteGroup") -> "FiniteGroup":
        """Elements are encoded as a * |second| + b."""
        n = second.order
        size = first.order * n
        table = [
            [first.multiply(x // n, y // n) * n + second.multiply(x % n, y % n) for y in range(size)]
            for x in range(size)
        ]
        return cls(table, name=f"{first.name}x{second.name}")

    @classmethod
    def symmetric(cls, degree: int) -> "FiniteGroup":
        """The symmetric group on `degree` letters, permutations listed lexicographically."""
        from itertools import permutations

        perms = list(permutations(range(degree)))
        index = {perm: position for position, perm in enumerate(perms)}
        # (p·q)(i) = p(q(i)): apply q first
        table = [[index[tuple(p[q[i]] for i in range(degree))] for q in perms] for p in perms]
        return cls(table, name=f"S{degree}")
