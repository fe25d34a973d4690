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

"""Budgeted backtracking over ordered variables."""

from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence
from typing import Any

from app.app_utils.budget import SearchBudget

Assignment = dict[Hashable, Any]


def backtrack_assignments(
    variables: Sequence[Hashable],
    candidates: Callable[[Assignment, Hashable], Iterable[Any]],
    accept: Callable[[Assignment, Hashable], bool],
    budget: SearchBudget,
) -> Iterator[Assignment]:
    """Yields every complete assignment of `variables`, in lexicographic order.

    Args:
        variables: Variables in assignment order.
        candidates: Returns the candidate values of a variable given the partial
            assignment of all earlier variables.
        accept: Called right after a variable is assigned; returns False to prune.
        budget: Charged one node per candidate tried.

    Yields:
        A fresh dict for every complete assignment.
    """
    assignment: Assignment = {}
    depth = len(variables)
    if depth == 0:
        yield {}
        return
    # One candidate iterator per assigned variable.
    stack: list[Iterator[Any]] = [iter(candidates(assignment, variables[0]))]
    while stack:
        position = len(stack) - 1
        variable = variables[position]
        assignment.pop(variable, None)
        for value in stack[-1]:
            budget.spend()
            assignment[variable] = value
            if accept(assignment, variable):
                break
            del assignment[variable]
        else:
            stack.pop()
            continue
        if position + 1 == depth:
            yield dict(assignment)
        else:
            stack.append(iter(candidates(assignment, variables[position + 1])))
