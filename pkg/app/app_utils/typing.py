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

"""Document schemas and the run configuration of the command line."""

from pathlib import Path
from typing import Annotated, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    field_validator,
    model_validator,
)

from app.app_utils.budget import DEFAULT_BUDGET

Pair = tuple[NonNegativeInt, NonNegativeInt]
Triple = tuple[NonNegativeInt, NonNegativeInt, NonNegativeInt]


class StrictModel(BaseModel):
    """Unknown keys are rejected everywhere."""

    model_config = ConfigDict(extra="forbid")


# ---------------------------------------------------------------------------
# 2-groupoids and their generators
# ---------------------------------------------------------------------------


class OneCellRecord(StrictModel):
    id: NonNegativeInt
    src: NonNegativeInt
    tgt: NonNegativeInt


class TwoCellRecord(StrictModel):
    id: NonNegativeInt
    src1: NonNegativeInt
    tgt1: NonNegativeInt


class TwoGroupoidBody(StrictModel):
    """Composition tables; comp1/vcomp/hcomp rows are (first, second, composite)."""

    name: str = "G"
    objects: list[NonNegativeInt]
    one_cells: list[OneCellRecord]
    id1: list[Pair]
    comp1: list[Triple]
    two_cells: list[TwoCellRecord]
    id2: list[Pair]
    vcomp: list[Triple]
    hcomp: list[Triple]


class TwoGroupoidDocument(TwoGroupoidBody):
    kind: Literal["two_groupoid"]


class GroupSpec(StrictModel):
    family: Literal["trivial", "cyclic", "symmetric"] = "cyclic"
    order: PositiveInt = 1


class GeneratorSpec(StrictModel):
    """A generated coefficient 2-groupoid, optionally with every object doubled."""

    generator: Literal["terminal", "delooping", "double_delooping", "indiscrete"]
    group: GroupSpec | None = None
    size: PositiveInt = 1
    adjoin: bool = False

    @model_validator(mode="after")
    def _group_given(self) -> "GeneratorSpec":
        if self.generator in ("delooping", "double_delooping") and self.group is None:
            raise ValueError(f"generator {self.generator} needs a group")
        return self


Coefficients = GeneratorSpec | TwoGroupoidBody


# ---------------------------------------------------------------------------
# Simplicial sets, covers, cosimplicial 2-groupoids, maps
# ---------------------------------------------------------------------------


class SimplexTable(StrictModel):
    n: NonNegativeInt
    i: NonNegativeInt
    table: list[Pair]


class SSetDocument(StrictModel):
    kind: Literal["sset"]
    name: str = "X"
    levels: Annotated[list[list[NonNegativeInt]], Field(min_length=4, max_length=4)]
    faces: list[SimplexTable]
    degens: list[SimplexTable]


class CoverBody(StrictModel):
    name: str = "K"
    simplices: Annotated[list[Annotated[list[str], Field(min_length=1)]], Field(min_length=1)]


class CoverDocument(CoverBody):
    kind: Literal["cover"]


class CechRecipe(StrictModel):
    """`cover` is a standard cover name or an inline list of maximal simplices."""

    cover: str | CoverBody
    coefficients: Coefficients
    indexing: Literal["ordered", "increasing"] = "ordered"


class FunctorBody(StrictModel):
    name: str = "F"
    objects: list[Pair]
    one_cells: list[Pair]
    two_cells: list[Pair]


class CofaceRecord(FunctorBody):
    n: Annotated[int, Field(ge=1, le=3)]
    i: Annotated[int, Field(ge=0, le=3)]


class CosimplicialDocument(StrictModel):
    """Exactly one of explicit `levels` + `cofaces`, `constant`, or `cech`."""

    kind: Literal["cosimplicial_2gpd"]
    name: str | None = None
    levels: Annotated[list[TwoGroupoidBody], Field(min_length=4, max_length=4)] | None = None
    cofaces: list[CofaceRecord] | None = None
    constant: Coefficients | None = None
    cech: CechRecipe | None = None

    @model_validator(mode="after")
    def _one_description(self) -> "CosimplicialDocument":
        explicit = self.levels is not None or self.cofaces is not None
        if explicit and (self.levels is None or self.cofaces is None):
            raise ValueError("explicit cosimplicial documents need both levels and cofaces")
        given = sum([explicit, self.constant is not None, self.cech is not None])
        if given != 1:
            raise ValueError("give exactly one of levels+cofaces, constant, or cech")
        return self


class CoefficientMap(StrictModel):
    """Map of Čech objects over one cover induced by a map of coefficients.

    identity: the coefficients agree; projection: the source coefficients are
    the adjoined form of the target's; collapse: everything to the target's
    first object.
    """

    type: Literal["identity", "projection", "collapse"]


class MapDocument(StrictModel):
    kind: Literal["map"]
    name: str = "phi"
    source: str | None = None
    target: str | None = None
    components: Annotated[list[FunctorBody], Field(min_length=4, max_length=4)] | None = None
    coefficients: CoefficientMap | None = None

    @model_validator(mode="after")
    def _one_description(self) -> "MapDocument":
        if (self.components is None) == (self.coefficients is None):
            raise ValueError("give exactly one of components or coefficients")
        return self


Document = Annotated[
    TwoGroupoidDocument | SSetDocument | CosimplicialDocument | CoverDocument | MapDocument,
    Field(discriminator="kind"),
]


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------


class RunConfig(BaseModel):
    """Resolved options of one command-line run."""

    inputs: list[Path] = Field(default_factory=list)
    subcommand: str
    budget: PositiveInt = DEFAULT_BUDGET
    dims: list[int] = Field(default_factory=lambda: [0, 1])
    output_format: Literal["text", "doc"] = "text"
    out: Path | None = None
    full: bool = False

    @field_validator("dims")
    @classmethod
    def _dims_in_range(cls, dims: list[int]) -> list[int]:
        if not dims:
            raise ValueError("dims must not be empty")
        if any(k not in (0, 1, 2) for k in dims):
            raise ValueError(f"dims must be a subset of {{0,1,2}}, got {dims}")
        return sorted(set(dims))
