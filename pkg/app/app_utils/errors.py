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

"""Exception hierarchy shared by the library and the command line."""

from typing import Any


class Desc2Error(Exception):
    """Base class for every error raised on purpose by this package."""


class StructuralError(Desc2Error, ValueError):
    """A table refers to an identifier that does not exist, or has the wrong shape."""


class CompositionError(Desc2Error, ValueError):
    """Two cells were composed although their boundaries do not match."""

    def __init__(self, kind: str, first: Any, second: Any) -> None:
        super().__init__(f"{kind} composition undefined for cells {first!r} and {second!r}")
        self.kind = kind
        self.first = first
        self.second = second


class DescentTypingError(Desc2Error, ValueError):
    """A descent datum, gauge transformation or descent 2-cell is mistyped."""

    def __init__(self, arrow: str, detail: str) -> None:
        super().__init__(f"{arrow}: {detail}")
        self.arrow = arrow


class CofaceCompatibilityError(Desc2Error, ValueError):
    """A level-wise map does not commute with the coface d^index into `degree`."""

    def __init__(self, degree: int, index: int, detail: str = "") -> None:
        message = f"map does not commute with coface (n={degree}, i={index})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.degree = degree
        self.index = index


class BudgetExceededError(Desc2Error, RuntimeError):
    """An enumeration visited more partial assignments than it was allowed to."""

    def __init__(self, operation: str, budget: int) -> None:
        super().__init__(f"[{operation}] enumeration budget of {budget} nodes exceeded")
        self.operation = operation
        self.budget = budget


class DocumentError(Desc2Error, ValueError):
    """A document could not be parsed or does not describe a known kind."""

    def __init__(self, location: str, detail: str) -> None:
        super().__init__(f"{location}: {detail}")
        self.location = location
