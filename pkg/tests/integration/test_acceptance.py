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

"""Library-level checks on the shipped fixtures: the oracle, translation,
comparison, invariance and Kan conditions."""

from pathlib import Path

import pytest

from app.app_utils.documents import load, load_cosimplicial, load_levelwise_map
from app.app_utils.errors import BudgetExceededError
from app.tools.cech import abelian_cohomology_oracle
from app.tools.cosimplicial import levelwise_nerve, validate_cosimplicial
from app.tools.descent import check_invariance, gauge_classes
from app.tools.nerve import check_nerve_product, two_nerve
from app.tools.simplicial_set import kan_check
from app.tools.totalization import compare_nerve_tot, tot_r_direct, translation_holds
from app.tools.two_groupoid import validate_two_groupoid

DATA = Path(__file__).resolve().parents[2] / "data"


@pytest.mark.parametrize(
    "name,orders",
    [
        ("cech_circle_z2.json", (2, 2, 1)),
        ("cech_sphere_z2.json", (2, 1, 2)),
        pytest.param("cech_rp2_z2.json", (2, 2, 2), marks=pytest.mark.slow),
        pytest.param("cech_rp2_z3.json", (3, 1, 1), marks=pytest.mark.slow),
    ],
)
def test_oracle_predicts_gauge_classes(name: str, orders: tuple[int, int, int]) -> None:
    C = load_cosimplicial(DATA / name)
    report = abelian_cohomology_oracle(C)
    assert report.orders == orders
    assert len(gauge_classes(C).classes) == report.descent_class_count


def test_interval_with_loop_coefficients() -> None:
    C = load_cosimplicial(DATA / "cech_interval_bz2_ordered.json")
    assert validate_cosimplicial(C).is_valid
    report = abelian_cohomology_oracle(C)
    assert report.mode == "BA"
    assert len(gauge_classes(C).classes) == report.descent_class_count


@pytest.mark.parametrize("name", ["const_terminal.json", "const_b2z2.json"])
def test_nerve_of_desc_matches_totalization(name: str) -> None:
    report = compare_nerve_tot(load_cosimplicial(DATA / name), dims=(0, 1, 2))
    assert report.passed, report.summary()


@pytest.mark.parametrize(
    "name,edges",
    [
        ("const_terminal.json", "all"),
        ("const_b2z2.json", "all"),
        ("cech_circle_z2.json", "normal"),
        ("cech_sphere_z2.json", "normal"),
        ("cech_sphere_z2.json", "local"),
        pytest.param("cech_rp2_z2.json", "local", marks=pytest.mark.slow),
    ],
)
def test_components_of_totalization_are_gauge_classes(name: str, edges: str) -> None:
    assert translation_holds(load_cosimplicial(DATA / name), edges=edges)


@pytest.mark.parametrize("name", ["cech_circle_z2.json", "cech_sphere_z2.json"])
def test_low_dimensional_comparison_on_cech_objects(name: str) -> None:
    report = compare_nerve_tot(load_cosimplicial(DATA / name), dims=(0, 1))
    assert report.passed, report.summary()


@pytest.mark.slow
def test_normal_paths_on_projective_plane_exceed_budget() -> None:
    # 1024 data with 2^15 gauges each
    with pytest.raises(BudgetExceededError):
        compare_nerve_tot(load_cosimplicial(DATA / "cech_rp2_z2.json"), dims=(0, 1), budget=100_000)


@pytest.mark.slow
def test_full_paths_on_projective_plane_exceed_budget() -> None:
    X = levelwise_nerve(load_cosimplicial(DATA / "cech_rp2_z2.json"))
    with pytest.raises(BudgetExceededError):
        tot_r_direct(X, 1, budget=50_000)


@pytest.mark.slow
def test_collapse_is_not_asserted() -> None:
    report = check_invariance(load_levelwise_map(DATA / "map_collapse.json"))
    assert not report.asserted
    assert report.passed
    assert (report.source_classes, report.target_classes) == (2, 1)


@pytest.mark.slow
def test_adjoined_projection_is_a_bijection() -> None:
    report = check_invariance(load_levelwise_map(DATA / "map_projection.json"))
    assert report.asserted
    assert report.bijective


@pytest.mark.parametrize("name", ["terminal.json", "b2z2.json"])
def test_nerves_of_fixtures_are_kan(name: str) -> None:
    groupoid = load(DATA / name).value
    assert validate_two_groupoid(groupoid).is_valid
    assert kan_check(two_nerve(groupoid), 4).is_kan


def test_nerve_preserves_products() -> None:
    first = load(DATA / "terminal.json").value
    second = load(DATA / "b2z2.json").value
    assert check_nerve_product(second, second)
    assert check_nerve_product(first, second)
