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

"""Unit tests for document schemas, loading and report writing."""

import json
import tempfile
import unittest
from pathlib import Path

from pydantic import ValidationError

from app.app_utils.documents import (
    build_cover,
    build_two_groupoid,
    load,
    load_cosimplicial,
    load_levelwise_map,
    parse_document,
    to_jsonable,
    two_groupoid_document,
    write_report,
)
from app.app_utils.errors import DocumentError
from app.app_utils.typing import CosimplicialDocument, GeneratorSpec, RunConfig
from app.tools.cech import double_delooping
from app.tools.descent import DescentDatum
from app.tools.groups import FiniteGroup

DATA = Path(__file__).resolve().parents[2] / "data"


class TestLoading(unittest.TestCase):
    def test_two_groupoid_document(self):
        document = load(DATA / "terminal.json")
        self.assertEqual(document.kind, "two_groupoid")
        self.assertEqual(document.value.cell_counts(), (1, 1, 1))

    def test_text_cover(self):
        document = load(DATA / "rp2.txt")
        self.assertEqual(document.kind, "cover")
        self.assertEqual(document.value.f_vector(), (6, 15, 10))

    def test_cech_document(self):
        C = load_cosimplicial(DATA / "cech_circle_z2.json")
        self.assertEqual(C.name, "cech_circle_z2")
        self.assertEqual([level.width for level in C.levels], [3, 3, 0, 0])

    def test_wrong_kind(self):
        with self.assertRaises(DocumentError):
            load_cosimplicial(DATA / "terminal.json")

    def test_map_document_resolves_relative_paths(self):
        levelwise = load_levelwise_map(DATA / "map_identity.json")
        self.assertEqual(levelwise.name, "identity")
        levelwise.check_compatibility()

    def test_missing_file(self):
        with self.assertRaises(DocumentError):
            load(DATA / "does_not_exist.json")


class TestParseErrors(unittest.TestCase):
    def test_malformed_json_names_a_position(self):
        with self.assertRaises(DocumentError) as context:
            load(DATA / "malformed.json")
        self.assertRegex(context.exception.location, r":\d+:\d+$")

    def test_unknown_key_names_its_path(self):
        with self.assertRaises(DocumentError) as context:
            load(DATA / "unknown_key.json")
        self.assertTrue(context.exception.location.endswith("cover.weights"))

    def test_unknown_kind(self):
        with self.assertRaises(DocumentError):
            parse_document('{"kind": "three_groupoid"}')

    def test_unknown_standard_cover(self):
        with self.assertRaises(DocumentError) as context:
            build_cover("torus")
        self.assertEqual(context.exception.location, "cech.cover")


class TestSchemas(unittest.TestCase):
    def test_delooping_needs_a_group(self):
        with self.assertRaises(ValidationError):
            GeneratorSpec(generator="delooping")

    def test_one_cosimplicial_description(self):
        coefficients = {"generator": "terminal"}
        with self.assertRaises(ValidationError):
            CosimplicialDocument(
                kind="cosimplicial_2gpd",
                constant=coefficients,
                cech={"cover": "circle", "coefficients": coefficients},
            )
        with self.assertRaises(ValidationError):
            CosimplicialDocument(kind="cosimplicial_2gpd")

    def test_run_config_dims(self):
        self.assertEqual(RunConfig(subcommand="compare", dims=[2, 0, 0]).dims, [0, 2])
        for dims in ([3], []):
            with self.subTest(dims=dims):
                with self.assertRaises(ValidationError):
                    RunConfig(subcommand="compare", dims=dims)


class TestWriting(unittest.TestCase):
    def test_two_groupoid_round_trip(self):
        G = double_delooping(FiniteGroup.cyclic(3))
        model = parse_document(json.dumps(two_groupoid_document(G)))
        self.assertEqual(build_two_groupoid(model).tables(), G.tables())

    def test_to_jsonable(self):
        self.assertEqual(to_jsonable(DescentDatum((0, 1), (0,), ())), {"x": [0, 1], "g": [0], "a": []})

    def test_write_report(self):
        with tempfile.TemporaryDirectory() as directory:
            out = Path(directory) / "report.json"
            text = write_report({"kind": "descent_classes", "classes": 2}, out)
            self.assertEqual(out.read_text(encoding="utf-8"), text)
            self.assertTrue(text.endswith("\n"))
            self.assertEqual(json.loads(text)["classes"], 2)
