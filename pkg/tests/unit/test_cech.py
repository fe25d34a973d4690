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

"""Unit tests for coefficient builders, covers, Čech objects and the abelian oracle."""

import unittest

import numpy as np

from app.app_utils.errors import DocumentError, StructuralError
from app.tools.cech import (
    CoverComplex,
    CrossedModule,
    Indexing,
    PowerTwoGroupoid,
    abelian_cochain_complex,
    abelian_cohomology_oracle,
    adjoin_isomorphic_object,
    cech_cosimplicial,
    cech_index_sets,
    cover_from_text,
    delooping,
    disjoint_union,
    double_delooping,
    indiscrete_groupoid,
    invariant_factors,
    kernel_order,
    standard_covers,
)
from app.tools.groups import FiniteGroup
from app.tools.two_groupoid import terminal_two_groupoid, validate_two_groupoid


class TestCoefficients(unittest.TestCase):
    def test_adjoined_object(self):
        adjoined, projection = adjoin_isomorphic_object(delooping(FiniteGroup.cyclic(2)))
        self.assertEqual(adjoined.cell_counts(), (2, 8, 8))
        self.assertIs(projection.source, adjoined)

    def test_disjoint_union(self):
        union = disjoint_union(terminal_two_groupoid(), terminal_two_groupoid())
        self.assertEqual(union.cell_counts(), (2, 2, 2))
        self.assertTrue(validate_two_groupoid(union).is_valid)

    def test_crossed_module_must_have_a_homomorphic_boundary(self):
        with self.assertRaises(StructuralError):
            CrossedModule(FiniteGroup.cyclic(2), FiniteGroup.cyclic(3), (0, 1), ((0, 1), (0, 1), (0, 1)))

    def test_power_generators_change_one_coordinate(self):
        power = PowerTwoGroupoid(delooping(FiniteGroup.cyclic(2)), ["a", "b"])
        generators = list(power.generating_one_cells_from((0, 0)))
        self.assertEqual(generators, [(0, 0), (1, 0), (0, 1)])
        self.assertEqual(power.cell_counts(), (1, 4, 4))

    def test_local_cells_change_at_most_one_coordinate(self):
        loops = PowerTwoGroupoid(delooping(FiniteGroup.cyclic(2)), range(3))
        self.assertEqual(loops.local_hom1((0, 0, 0), (0, 0, 0)), [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        cells = PowerTwoGroupoid(double_delooping(FiniteGroup.cyclic(3)), range(2))
        self.assertEqual(cells.local_hom2((0, 0), (0, 0)), [(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)])
        self.assertEqual(len(cells.hom2((0, 0), (0, 0))), 9)
        pairs = PowerTwoGroupoid(indiscrete_groupoid(2), range(2))
        self.assertEqual(pairs.local_hom1((0, 0), (1, 0)), [(1, 0)])
        self.assertEqual(pairs.local_hom1((0, 0), (1, 1)), [])


class TestCovers(unittest.TestCase):
    def test_f_vectors(self):
        expected = {
            "point": (1,),
            "interval": (2, 1),
            "circle": (3, 3),
            "sphere": (4, 6, 4),
            "rp2": (6, 15, 10),
        }
        covers = standard_covers()
        for name, f_vector in expected.items():
            with self.subTest(cover=name):
                self.assertEqual(covers[name].f_vector(), f_vector)

    def test_cover_from_text(self):
        cover = cover_from_text("0 1\n1 2\n# closing edge\n0 2\n", name="loop")
        self.assertEqual(cover.f_vector(), (3, 3))
        self.assertTrue(cover.is_simplex(["2", "0"]))

    def test_bad_cover_text(self):
        for text in ("0 1 1\n", "# nothing here\n"):
            with self.subTest(text=text):
                with self.assertRaises(DocumentError):
                    cover_from_text(text)

    def test_cover_must_be_downward_closed(self):
        with self.assertRaises(StructuralError):
            CoverComplex(["a", "b"], [["a"], ["a", "b"]])

    def test_increasing_index_widths(self):
        covers = standard_covers()
        for name, widths in (("rp2", [6, 15, 10, 0]), ("sphere", [4, 6, 4, 0]), ("circle", [3, 3, 0, 0])):
            with self.subTest(cover=name):
                index_sets = cech_index_sets(covers[name], Indexing.INCREASING)
                self.assertEqual([len(s) for s in index_sets], widths)

    def test_ordered_index_sets_allow_repeats(self):
        index_sets = cech_index_sets(standard_covers()["interval"], Indexing.ORDERED)
        self.assertEqual([len(s) for s in index_sets], [2, 4, 8, 16])
        self.assertIn(("0", "0", "1"), index_sets[2])


class TestAbelianOracle(unittest.TestCase):
    def test_smith_normal_form(self):
        self.assertEqual(sorted(invariant_factors(np.array([[2, 0], [0, 3]]))), [1, 6])
        self.assertEqual(invariant_factors(np.zeros((2, 2), dtype=np.int64)), [])
        self.assertEqual(kernel_order(np.array([[2]]), 4), 2)

    def test_cohomology_orders(self):
        covers = standard_covers()
        z2 = double_delooping(FiniteGroup.cyclic(2))
        z3 = double_delooping(FiniteGroup.cyclic(3))
        cases = [
            ("circle", z2, (2, 2, 1), 1),
            ("sphere", z2, (2, 1, 2), 2),
            ("rp2", z2, (2, 2, 2), 2),
            ("rp2", z3, (3, 1, 1), 1),
        ]
        for cover, coefficients, orders, classes in cases:
            with self.subTest(cover=cover, coefficients=coefficients.name):
                C = cech_cosimplicial(covers[cover], coefficients, Indexing.INCREASING)
                report = abelian_cohomology_oracle(C)
                self.assertEqual(report.orders, orders)
                self.assertEqual(report.descent_class_count, classes)
                self.assertIn("|H2|=", report.summary())

    def test_cochain_complex(self):
        C = cech_cosimplicial(standard_covers()["rp2"], double_delooping(FiniteGroup.cyclic(2)), Indexing.INCREASING)
        complex_ = abelian_cochain_complex(C)
        self.assertEqual(complex_.mode, "B2A")
        self.assertEqual(complex_.ranks, (6, 15, 10, 0))
        self.assertFalse((complex_.delta(1) @ complex_.delta(0)).any())

    def test_representatives_are_cocycles(self):
        C = cech_cosimplicial(standard_covers()["sphere"], double_delooping(FiniteGroup.cyclic(2)), Indexing.INCREASING)
        report = abelian_cohomology_oracle(C)
        self.assertEqual(len(report.representatives), 2)
        complex_ = abelian_cochain_complex(C)
        for cochain in report.representatives:
            self.assertTrue(complex_.is_cocycle(2, cochain))

    def test_loop_coefficients(self):
        C = cech_cosimplicial(standard_covers()["circle"], delooping(FiniteGroup.cyclic(2)), Indexing.INCREASING)
        report = abelian_cohomology_oracle(C)
        self.assertEqual(report.mode, "BA")
        self.assertEqual(report.descent_class_count, report.orders[1])

    def test_non_abelian_coefficients_are_rejected(self):
        C = cech_cosimplicial(standard_covers()["circle"], delooping(FiniteGroup.symmetric(3)), Indexing.INCREASING)
        with self.assertRaises(StructuralError):
            abelian_cohomology_oracle(C)
