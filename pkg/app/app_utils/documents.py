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

"""Reading documents into library objects and writing reports back out.

Every document is one UTF-8 JSON object with a `kind` field; cover complexes
may also be given as plain text (`.txt`, one maximal simplex per line).
"""

import dataclasses
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from pydantic import TypeAdapter, ValidationError

from app.app_utils.errors import DocumentError, StructuralError
from app.app_utils.typing import (
    Coefficients,
    CosimplicialDocument,
    CoverBody,
    Document,
    FunctorBody,
    GroupSpec,
    MapDocument,
    SSetDocument,
    TwoGroupoidBody,
)
from app.tools.cech import (
    CoverComplex,
    Indexing,
    PowerTwoGroupoid,
    adjoin_isomorphic_object,
    cech_cosimplicial,
    cech_levelwise_map,
    cover_from_text,
    delooping,
    double_delooping,
    indiscrete_groupoid,
    standard_covers,
)
from app.tools.cosimplicial import (
    LevelwiseMap,
    RestrictedCosimplicial2Groupoid,
    constant_cosimplicial,
)
from app.tools.groups import FiniteGroup
from app.tools.simplicial_set import FiniteCoskSSet
from app.tools.two_groupoid import (
    CallableTwoFunctor,
    TableTwoFunctor,
    TableTwoGroupoid,
    TwoFunctor,
    TwoGroupoid,
    constant_functor,
    projection,
    terminal_two_groupoid,
)

logger = logging.getLogger(__name__)

_DOCUMENT = TypeAdapter(Document)


@dataclass
class LoadedDocument:
    """A parsed document and the object it describes."""

    path: Path
    kind: str
    model: Any
    value: Any


def _location(error: ValidationError) -> str:
    first = error.errors()[0]
    return ".".join(str(part) for part in first["loc"]) or "<root>"


def parse_document(text: str, source: str = "<string>") -> Any:
    """Parses and schema-checks a JSON document.

    Raises:
        DocumentError: On malformed JSON, a missing or unknown `kind`, unknown
            keys or ill-typed values.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{source}:{e.lineno}:{e.colno}", e.msg) from e
    try:
        return _DOCUMENT.validate_python(payload)
    except ValidationError as e:
        raise DocumentError(f"{source}:{_location(e)}", e.errors()[0]["msg"]) from e


def load(path: str | Path) -> LoadedDocument:
    """Reads a document and builds its object.

    Raises:
        DocumentError: If the file cannot be read or parsed.
        StructuralError: If the tables are inconsistent (dangling identifiers,
            non-total functors, mismatched levels).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise DocumentError(str(path), f"cannot read document: {e}") from e
    if path.suffix == ".txt":
        cover = cover_from_text(text, name=path.stem)
        return LoadedDocument(path, "cover", None, cover)
    model = parse_document(text, str(path))
    logger.debug(f"[documents] {path}: kind {model.kind}")
    if model.kind == "two_groupoid":
        value: Any = build_two_groupoid(model)
    elif model.kind == "sset":
        value = build_sset(model)
    elif model.kind == "cosimplicial_2gpd":
        value = build_cosimplicial(model, name=path.stem)
    elif model.kind == "cover":
        value = build_cover(model)
    else:
        value = None
    return LoadedDocument(path, model.kind, model, value)


def load_cosimplicial(path: str | Path) -> RestrictedCosimplicial2Groupoid:
    document = load(path)
    if document.kind != "cosimplicial_2gpd":
        raise DocumentError(str(path), f"expected a cosimplicial_2gpd document, got {document.kind}")
    return document.value


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def build_two_groupoid(body: TwoGroupoidBody) -> TableTwoGroupoid:
    return TableTwoGroupoid(
        objects=body.objects,
        one_cells={cell.id: (cell.src, cell.tgt) for cell in body.one_cells},
        id1=dict(body.id1),
        comp1={(f, g): h for f, g, h in body.comp1},
        two_cells={cell.id: (cell.src1, cell.tgt1) for cell in body.two_cells},
        id2=dict(body.id2),
        vcomp={(a, b): c for a, b, c in body.vcomp},
        hcomp={(a, b): c for a, b, c in body.hcomp},
        name=body.name,
    )


def build_group(spec: GroupSpec) -> FiniteGroup:
    if spec.family == "trivial":
        return FiniteGroup.trivial()
    if spec.family == "symmetric":
        return FiniteGroup.symmetric(spec.order)
    return FiniteGroup.cyclic(spec.order)


def build_coefficients(spec: Coefficients) -> TwoGroupoid:
    if isinstance(spec, TwoGroupoidBody):
        return build_two_groupoid(spec)
    base: TableTwoGroupoid
    if spec.generator == "terminal":
        base = terminal_two_groupoid()
    elif spec.generator == "indiscrete":
        base = indiscrete_groupoid(spec.size)
    elif spec.generator == "delooping":
        base = delooping(build_group(spec.group))  # type: ignore[arg-type]
    else:
        base = double_delooping(build_group(spec.group))  # type: ignore[arg-type]
    if spec.adjoin:
        base, _ = adjoin_isomorphic_object(base)
    return base


def build_cover(body: CoverBody | str) -> CoverComplex:
    if isinstance(body, str):
        covers = standard_covers()
        if body not in covers:
            raise DocumentError("cech.cover", f"unknown standard cover {body!r}; known: {sorted(covers)}")
        return covers[body]
    return CoverComplex.from_maximal(body.simplices, name=body.name)


def build_functor(body: FunctorBody, source: TwoGroupoid, target: TwoGroupoid) -> TableTwoFunctor:
    return TableTwoFunctor(
        source, target, dict(body.objects), dict(body.one_cells), dict(body.two_cells), name=body.name
    )


def build_cosimplicial(document: CosimplicialDocument, name: str = "G") -> RestrictedCosimplicial2Groupoid:
    if document.cech is not None:
        recipe = document.cech
        cosimplicial = cech_cosimplicial(
            build_cover(recipe.cover), build_coefficients(recipe.coefficients), Indexing(recipe.indexing)
        )
    elif document.constant is not None:
        cosimplicial = constant_cosimplicial(build_coefficients(document.constant))
    else:
        levels = [build_two_groupoid(body) for body in document.levels or []]
        cofaces = {
            (record.n, record.i): build_functor(record, levels[record.n - 1], levels[record.n])
            for record in document.cofaces or []
        }
        cosimplicial = RestrictedCosimplicial2Groupoid(levels, cofaces, name=document.name or name)
    if document.name:
        cosimplicial.name = document.name
    return cosimplicial


def build_sset(document: SSetDocument) -> FiniteCoskSSet:
    return FiniteCoskSSet(
        document.levels,
        {(table.n, table.i): dict(table.table) for table in document.faces},
        {(table.n, table.i): dict(table.table) for table in document.degens},
        name=document.name,
    )


def _coefficient_functor(kind: str, source: TwoGroupoid, target: TwoGroupoid) -> TwoFunctor:
    if kind == "identity":
        return CallableTwoFunctor(source, target, lambda x: x, lambda f: f, lambda a: a, name="id")
    if kind == "collapse":
        return constant_functor(source, target, target.objects()[0])
    if not isinstance(source, TableTwoGroupoid) or 1 not in source.labels:
        raise StructuralError(f"projection needs adjoined source coefficients, got {source.name}")
    return projection(source, 1, target)


def build_levelwise_map(
    document: MapDocument,
    source: RestrictedCosimplicial2Groupoid,
    target: RestrictedCosimplicial2Groupoid,
) -> LevelwiseMap:
    """Builds the level-wise map; compatibility with cofaces is not checked here."""
    if document.components is not None:
        components = [
            build_functor(body, source.level(n), target.level(n)) for n, body in enumerate(document.components)
        ]
        return LevelwiseMap(source, target, components, name=document.name)
    source_level, target_level = source.level(0), target.level(0)
    if not isinstance(source_level, PowerTwoGroupoid) or not isinstance(target_level, PowerTwoGroupoid):
        raise StructuralError("coefficient maps need Čech cosimplicial documents on both sides")
    base = _coefficient_functor(document.coefficients.type, source_level.base, target_level.base)  # type: ignore[union-attr]
    levelwise = cech_levelwise_map(source, target, base)
    levelwise.name = document.name
    return levelwise


def load_levelwise_map(
    map_path: str | Path, source_path: str | Path | None = None, target_path: str | Path | None = None
) -> LevelwiseMap:
    """Loads a map document; source and target default to the paths it names, relative to it."""
    document = load(map_path)
    if document.kind != "map":
        raise DocumentError(str(map_path), f"expected a map document, got {document.kind}")
    model: MapDocument = document.model
    base_dir = Path(map_path).parent
    if source_path is None and model.source is not None:
        source_path = base_dir / model.source
    if target_path is None and model.target is not None:
        target_path = base_dir / model.target
    if source_path is None or target_path is None:
        raise DocumentError(str(map_path), "map document names no source or target")
    return build_levelwise_map(model, load_cosimplicial(source_path), load_cosimplicial(target_path))


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------


def to_jsonable(value: Any) -> Any:
    """Cells as JSON: tuples become lists, dataclasses become objects."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, (tuple, list)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if hasattr(value, "item"):
        return value.item()
    return value


def two_groupoid_document(groupoid: TableTwoGroupoid) -> dict[str, Any]:
    """The two_groupoid document of a table with integer identifiers."""
    tables = groupoid.tables()
    return {
        "kind": "two_groupoid",
        "name": groupoid.name,
        "objects": tables["objects"],
        "one_cells": [{"id": f, "src": x, "tgt": y} for f, (x, y) in sorted(tables["one_cells"].items())],
        "id1": sorted([x, f] for x, f in tables["id1"].items()),
        "comp1": sorted([f, g, h] for (f, g), h in tables["comp1"].items()),
        "two_cells": [{"id": a, "src1": f, "tgt1": g} for a, (f, g) in sorted(tables["two_cells"].items())],
        "id2": sorted([f, a] for f, a in tables["id2"].items()),
        "vcomp": sorted([a, b, c] for (a, b), c in tables["vcomp"].items()),
        "hcomp": sorted([a, b, c] for (a, b), c in tables["hcomp"].items()),
    }


def write_report(payload: dict[str, Any], out: str | Path | None) -> str:
    """Serializes a report document; writes it to `out` when given."""
    text = json.dumps(to_jsonable(payload), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"[documents] wrote {out}")
    return text
