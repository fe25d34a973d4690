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

"""Unit tests for table simplicial sets, their validator and the Kan check."""

import unittest

from app.app_utils.errors import BudgetExceededError, StructuralError
from app.tools.simplicial_set import (
    FiniteCoskSSet,
    describe,
    kan_check,
    level4_simplices,
    sset_disjoint_union,
    sset_pi0,
    sset_product,
    standard_simplex,
    validate_sset,
)


class TestStandardSimplex(unittest.TestCase):
    def test_level_counts(self):
        # weakly increasing tuples: C(n + k + 1, k + 1)
        self.assertEqual(standard_simplex(0).level_counts(), (1, 1, 1, 1))
        self.assertEqual(standard_simplex(1).level_counts(), (2, 3, 4, 5))
        self.assertEqual(standard_simplex(2).level_counts(), (3, 6, 10, 15))

    def test_simplicial_identities_hold(self):
        for n in range(4):
            with self.subTest(n=n):
                self.assertTrue(validate_sset(standard_simplex(n)).is_valid)

    def test_rewired_face_is_reported(self):
        broken = standard_simplex(2).with_face(2, 0, (0, 1, 2), (0, 2))
        report = validate_sset(broken)
        self.assertFalse(report.is_valid)
        self.assertEqual(report.families(), {"simplicial_identity"})

    def test_degenerate_simplices(self):
        delta = standard_simplex(1)
        self.assertTrue(delta.is_degenerate(1, (0, 0)))
        self.assertFalse(delta.is_degenerate(1, (0, 1)))

    def test_without_simplex_removes_cofaces(self):
        boundary = standard_simplex(1).without_simplex(1, (0, 1))
        self.assertEqual(boundary.level_counts(), (2, 2, 2, 2))
        self.assertEqual(len(sset_pi0(boundary)), 2)

    def test_degenerate_simplex_cannot_be_removed(self):
        with self.assertRaises(StructuralError):
            standard_simplex(1).without_simplex(1, (0, 0))

    def test_level4_from_coskeleton(self):
        # weakly increasing 5-tuples again
        self.assertEqual(len(level4_simplices(standard_simplex(0))), 1)
        self.assertEqual(len(level4_simplices(standard_simplex(1))), 6)
        self.assertEqual(len(level4_simplices(standard_simplex(2))), 21)

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            standard_simplex(4)


class TestConstructions(unittest.TestCase):
    def test_product(self):
        square = sset_product(standard_simplex(1), standard_simplex(1))
        self.assertEqual(square.level_counts(), (4, 9, 16, 25))
        self.assertTrue(validate_sset(square).is_valid)

    def test_disjoint_union(self):
        union = sset_disjoint_union(standard_simplex(0), standard_simplex(1))
        self.assertEqual(union.level_counts(), (3, 4, 5, 6))
        self.assertEqual(len(sset_pi0(union)), 2)

    def test_missing_face_table(self):
        point = standard_simplex(0).truncation()
        del point["faces"][(2, 1)]
        with self.assertRaises(StructuralError):
            FiniteCoskSSet(point["levels"], point["faces"], point["degens"])

    def test_describe(self):
        text = describe(standard_simplex(1), tables=True)
        self.assertTrue(text.startswith("Delta1: level0=2 level1=3 level2=4 level3=5"))
        self.assertIn("1 (0, 1) -> (1,) (0,)", text)


class TestKanCheck(unittest.TestCase):
    def test_point_is_kan(self):
        report = kan_check(standard_simplex(0), 4)
        self.assertTrue(report.is_kan)
        self.assertEqual(report.horns_checked[1], 2)

    def test_interval_is_not_kan(self):
        report = kan_check(standard_simplex(1), 2)
        self.assertFalse(report.is_kan)
        self.assertIn("unfillable", report.summary())

    def test_dimension_range(self):
        with self.assertRaises(ValueError):
            kan_check(standard_simplex(0), 5)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            kan_check(standard_simplex(2), 4, budget=10)
