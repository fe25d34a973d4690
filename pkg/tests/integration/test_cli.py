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

"""End-to-end runs of the `desc2` command line on the shipped documents."""

import json
import logging
from collections.abc import Iterator
from pathlib import Path

import pytest
from click.testing import CliRunner

from app.cli import EXIT_FAILURE, EXIT_PARSE, EXIT_PASS, EXIT_RESOURCE, cli

DATA = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(autouse=True)
def reset_logging() -> Iterator[None]:
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)


def run(*args: str, env: dict[str, str] | None = None):
    return CliRunner().invoke(cli, [str(a) for a in args], env=env)


@pytest.mark.parametrize(
    "name",
    ["terminal.json", "b2z2.json", "point_sset.json", "const_b2z2.json", "cech_circle_z2.json", "rp2.txt", "map_identity.json"],
)
def test_validate_accepts_fixtures(name: str) -> None:
    result = run("validate", DATA / name)
    assert result.exit_code == EXIT_PASS, result.output


def test_validate_reports_violation_family() -> None:
    result = run("validate", DATA / "b2z2_broken_interchange.json")
    assert result.exit_code == EXIT_FAILURE
    assert "interchange" in result.output


@pytest.mark.parametrize("name", ["malformed.json", "unknown_key.json", "does_not_exist.json"])
def test_parse_failures(name: str) -> None:
    result = run("validate", DATA / name)
    assert result.exit_code == EXIT_PARSE


def test_nerve_with_kan_check() -> None:
    result = run("nerve", DATA / "b2z2.json", "--kan", "3")
    assert result.exit_code == EXIT_PASS, result.output
    assert "level2=2" in result.output


def test_desc_enumerate() -> None:
    result = run("desc", "enumerate", DATA / "const_b2z2.json")
    assert result.exit_code == EXIT_PASS, result.output
    assert "const_b2z2: 2 descent data" in result.output


def test_desc_classes() -> None:
    result = run("desc", "classes", DATA / "cech_sphere_z2.json")
    assert result.exit_code == EXIT_PASS, result.output
    assert "16 descent data, 2 gauge classes" in result.output


def test_desc_classes_document(tmp_path: Path) -> None:
    out = tmp_path / "classes.json"
    result = run("desc", "classes", DATA / "cech_circle_z2.json", "--format", "doc", "--out", out)
    assert result.exit_code == EXIT_PASS, result.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["kind"] == "descent_classes"
    assert payload["data"] == 1
    assert len(payload["classes"]) == 1


def test_desc_compare() -> None:
    result = run("desc", "compare", DATA / "const_b2z2.json", "--dims", "0,1,2")
    assert result.exit_code == EXIT_PASS, result.output
    assert "k=2" in result.output


def test_desc_compare_rejects_dimension() -> None:
    result = run("desc", "compare", DATA / "const_b2z2.json", "--dims", "0,5")
    assert result.exit_code == EXIT_PARSE


def test_budget_exhaustion() -> None:
    result = run("desc", "enumerate", DATA / "cech_sphere_z2.json", "--budget", "1")
    assert result.exit_code == EXIT_RESOURCE


def test_budget_from_environment() -> None:
    result = run("desc", "enumerate", DATA / "cech_sphere_z2.json", env={"DESC2_BUDGET": "1"})
    assert result.exit_code == EXIT_RESOURCE


def test_oracle_check() -> None:
    result = run("oracle", DATA / "cech_sphere_z2.json", "--check")
    assert result.exit_code == EXIT_PASS, result.output
    assert "|H2|=2" in result.output
    assert "match" in result.output


def test_invariance_identity() -> None:
    circle = DATA / "cech_circle_z2.json"
    result = run("desc", "invariance", circle, circle, DATA / "map_identity.json")
    assert result.exit_code == EXIT_PASS, result.output
    assert "bijection" in result.output
