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

import unittest

from app.app_utils.errors import StructuralError
from app.tools.cech import Indexing, cech_cosimplicial, double_delooping, standard_covers
from app.tools.cosimplicial import RestrictedCosimplicialSSet, constant_cosimplicial, levelwise_nerve
from app.tools.descent import enumerate_descent_data, gauge_generators, identity_gauge
from app.tools.groups import FiniteGroup
from app.tools.simplicial_set import materialize
from app.tools.totalization import (
    compare_nerve_tot,
    datum_to_vertex,
    gauge_to_path,
    iter_tot,
    path_to_gauge,
    prism_chains,
    tot_components,
    tot_degeneracy,
    tot_r_direct,
    translation_holds,
    vertex_to_datum,
)
from app.tools.two_groupoid import terminal_two_groupoid


class TestPrismChains(unittest.TestCase):
    def test_point_prism(self):
        self.assertEqual(prism_chains(0, 0), (((0, 0),),))

    def test_square(self):
        chains = prism_chains(1, 1)
        self.assertEqual(len(chains), 11)
        self.assertEqual(chains[0], ((0, 0),))
        self.assertEqual(chains[-1], ((0, 0), (1, 0), (1, 1)))

    def test_chains_are_strictly_increasing(self):
        for chain in prism_chains(2, 2):
            for earlier, later in zip(chain, chain[1:]):
                self.assertTrue(earlier != later and earlier[0] <= later[0] and earlier[1] <= later[1])


class TestTotSimplices(unittest.TestCase):
    def setUp(self):
        self.C = constant_cosimplicial(double_delooping(FiniteGroup.cyclic(2)))
        self.X = levelwise_nerve(self.C)

    def test_vertices_are_descent_data(self):
        vertices = tot_r_direct(self.X, 0)
        self.assertEqual(len(vertices), 2)
        self.assertEqual(sorted(vertex_to_datum(v) for v in vertices), enumerate_descent_data(self.C))

    def test_degenerate_path_is_the_identity_gauge(self):
        for vertex in tot_r_direct(self.X, 0):
            path = tot_degeneracy(self.X, vertex, 0)
            self.assertEqual(path.face(0), vertex)
            self.assertEqual(path.face(1), vertex)
            self.assertEqual(path_to_gauge(self.C, path), identity_gauge(self.C, vertex_to_datum(vertex)))

    def test_datum_round_trip(self):
        for datum in enumerate_descent_data(self.C):
            self.assertEqual(vertex_to_datum(datum_to_vertex(self.C, self.X, datum)), datum)

    def test_gauge_round_trip(self):
        C = cech_cosimplicial(standard_covers()["circle"], double_delooping(FiniteGroup.cyclic(2)), Indexing.INCREASING)
        X = levelwise_nerve(C)
        for datum in enumerate_descent_data(C):
            for gauge in gauge_generators(C, datum):
                self.assertEqual(path_to_gauge(C, gauge_to_path(C, X, gauge)), gauge)

    def test_dimension_range(self):
        with self.assertRaises(ValueError):
            tot_r_direct(self.X, 3)

    def test_normal_simplices_need_nerve_levels(self):
        tables = RestrictedCosimplicialSSet([materialize(level) for level in self.X.levels], self.X.cofaces)
        with self.assertRaises(StructuralError):
            tot_r_direct(tables, 1, normal_only=True)

    def test_normal_paths_are_a_subset(self):
        every = set(tot_r_direct(self.X, 1))
        normal = set(tot_r_direct(self.X, 1, normal_only=True))
        self.assertTrue(normal)
        self.assertLessEqual(normal, every)


class TestComparison(unittest.TestCase):
    def test_nerve_and_totalization_agree(self):
        for coefficients in (terminal_two_groupoid(), double_delooping(FiniteGroup.cyclic(2))):
            with self.subTest(coefficients=coefficients.name):
                C = constant_cosimplicial(coefficients)
                report = compare_nerve_tot(C, dims=(0, 1, 2))
                self.assertTrue(report.passed, report.summary())
                self.assertEqual([row.k for row in report.rows], [0, 1, 2])

    def test_full_enumeration_in_low_dimensions(self):
        C = constant_cosimplicial(double_delooping(FiniteGroup.cyclic(2)))
        report = compare_nerve_tot(C, dims=(0, 1), full=True)
        self.assertTrue(report.passed, report.summary())
        self.assertGreaterEqual(report.rows[1].tot_count, report.rows[1].normal_count)


class TestComponents(unittest.TestCase):
    def test_translation(self):
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        covers = standard_covers()
        cases = [
            (constant_cosimplicial(b2z2), "all"),
            (cech_cosimplicial(covers["circle"], b2z2, Indexing.INCREASING), "normal"),
            (cech_cosimplicial(covers["sphere"], b2z2, Indexing.INCREASING), "normal"),
        ]
        for C, edges in cases:
            with self.subTest(name=C.name, edges=edges):
                self.assertTrue(translation_holds(C, edges=edges))

    def test_sphere_has_two_components(self):
        C = cech_cosimplicial(standard_covers()["sphere"], double_delooping(FiniteGroup.cyclic(2)), Indexing.INCREASING)
        self.assertEqual(len(tot_components(C, edges="local")), 2)

    def test_local_paths(self):
        C = cech_cosimplicial(standard_covers()["sphere"], double_delooping(FiniteGroup.cyclic(2)), Indexing.INCREASING)
        X = levelwise_nerve(C)
        # 16 data; 2^6 gauges out of each, 1 + 6 of them local
        self.assertEqual(len(tot_r_direct(X, 1, normal_only=True)), 1024)
        self.assertEqual(len(list(iter_tot(X, 1, normal_only=True, local=True))), 112)
        self.assertTrue(translation_holds(C, edges="local"))

    def test_local_paths_only_in_dimension_one(self):
        X = levelwise_nerve(constant_cosimplicial(terminal_two_groupoid()))
        with self.assertRaises(ValueError):
            list(iter_tot(X, 2, local=True))

    def test_unknown_edge_family(self):
        C = constant_cosimplicial(terminal_two_groupoid())
        with self.assertRaises(ValueError):
            tot_components(C, edges="diagonal")
