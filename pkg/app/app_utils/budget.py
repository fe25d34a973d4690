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

"""Node budgets for exhaustive enumerations."""

import logging

from app.app_utils.errors import BudgetExceededError

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000


class SearchBudget:
    """Counts partial assignments and fails loudly once the limit is passed.

    One budget may be shared by nested enumerations so that the limit bounds the
    total work of a command rather than each loop separately.

    Examples
    --------
    >>> budget = SearchBudget(2, "demo")
    >>> budget.spend()
    >>> budget.spend()
    >>> budget.used
    2
    """

    def __init__(self, limit: int = DEFAULT_BUDGET, operation: str = "enumeration") -> None:
        if limit <= 0:
            raise ValueError(f"budget must be positive, got {limit}")
        self.limit = limit
        self.operation = operation
        self.used = 0

    def spend(self, nodes: int = 1) -> None:
        self.used += nodes
        if self.used > self.limit:
            logger.warning(f"[{self.operation}] budget of {self.limit} nodes exhausted")
            raise BudgetExceededError(self.operation, self.limit)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)


def ensure_budget(budget: "SearchBudget | int | None", operation: str) -> SearchBudget:
    """Accept an existing budget, a plain limit, or nothing (the default limit)."""
    if isinstance(budget, SearchBudget):
        return budget
    if budget is None:
        return SearchBudget(DEFAULT_BUDGET, operation)
    return SearchBudget(budget, operation)
