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

"""Unit tests for finite strict 2-groupoids, their validator and 2-functors."""

import unittest

from app.app_utils.errors import CompositionError, StructuralError
from app.tools.cech import CrossedModule, crossed_module_2group, delooping, double_delooping, indiscrete_groupoid
from app.tools.groups import FiniteGroup
from app.tools.two_groupoid import (
    TableTwoFunctor,
    compose_functors,
    constant_functor,
    enumerate_two_functors,
    hom_2gpd,
    horizontal_compose,
    identity_functor,
    product,
    projection,
    tabulate,
    terminal_two_groupoid,
    validate_two_functor,
    validate_two_groupoid,
    vertical_compose,
)


class TestValidTables(unittest.TestCase):
    def test_generated_tables_are_valid(self):
        groupoids = [
            terminal_two_groupoid(),
            delooping(FiniteGroup.symmetric(3)),
            double_delooping(FiniteGroup.cyclic(3)),
            indiscrete_groupoid(3),
            crossed_module_2group(CrossedModule.from_abelian(FiniteGroup.cyclic(2))),
        ]
        for groupoid in groupoids:
            with self.subTest(groupoid=groupoid.name):
                report = validate_two_groupoid(groupoid)
                self.assertTrue(report.is_valid, report.summary())

    def test_cell_counts(self):
        self.assertEqual(terminal_two_groupoid().cell_counts(), (1, 1, 1))
        self.assertEqual(delooping(FiniteGroup.cyclic(3)).cell_counts(), (1, 3, 3))
        self.assertEqual(double_delooping(FiniteGroup.cyclic(2)).cell_counts(), (1, 1, 2))
        self.assertEqual(indiscrete_groupoid(2).cell_counts(), (2, 4, 4))

    def test_dangling_identifier_is_structural(self):
        with self.assertRaises(StructuralError):
            terminal_two_groupoid().with_entry("comp1", (0, 0), 99)

    def test_double_delooping_needs_abelian_group(self):
        with self.assertRaises(StructuralError):
            double_delooping(FiniteGroup.symmetric(3))


class TestViolationFamilies(unittest.TestCase):
    def setUp(self):
        self.b2z2 = double_delooping(FiniteGroup.cyclic(2))
        self.b2z3 = double_delooping(FiniteGroup.cyclic(3))

    def test_units(self):
        # the non-trivial loop as identity: every loop still has an inverse for it
        broken = delooping(FiniteGroup.cyclic(2)).with_entry("id1", 0, 1)
        report = validate_two_groupoid(broken)
        self.assertEqual(report.families(), {"units"})

    def test_associativity(self):
        # vertical composition on a non-trivial hom group is tied to whiskering by interchange
        broken = self.b2z3.with_entry("vcomp", (1, 1), 0)
        report = validate_two_groupoid(broken)
        self.assertEqual(report.families(), {"associativity", "interchange"})

    def test_interchange(self):
        # hcomp becomes "or": associative and unital, but 1 loses its horizontal inverse
        broken = self.b2z2.with_entry("hcomp", (1, 1), 1)
        report = validate_two_groupoid(broken)
        self.assertEqual(report.families(), {"interchange", "inverses"})

    def test_typing(self):
        # 0 -> 1 -> 0 sent to the loop at 1
        broken = indiscrete_groupoid(2).with_entry("comp1", (1, 2), 3)
        report = validate_two_groupoid(broken)
        self.assertIn("typing", report.families())
        self.assertFalse(report.is_valid)

    def test_reports_are_deterministic(self):
        broken = self.b2z2.with_entry("hcomp", (1, 1), 1)
        first = [str(v) for v in validate_two_groupoid(broken).violations]
        second = [str(v) for v in validate_two_groupoid(broken).violations]
        self.assertEqual(first, second)


class TestCompositions(unittest.TestCase):
    def setUp(self):
        self.s3 = FiniteGroup.symmetric(3)
        self.group = delooping(self.s3)

    def test_compose1_is_diagrammatic(self):
        # compose1(f, g) is "f then g", i.e. the product g·f
        for f in self.s3.elements:
            for g in self.s3.elements:
                self.assertEqual(self.group.compose1(f, g), self.s3.multiply(g, f))

    def test_inverses(self):
        G = self.group
        for f in G.one_cells():
            self.assertEqual(G.compose1(f, G.inverse1(f)), G.identity1(0))
            self.assertEqual(G.vertical_compose(G.identity2(f), G.vertical_inverse(G.identity2(f))), G.identity2(f))

    def test_checked_vertical_composition(self):
        with self.assertRaises(CompositionError):
            vertical_compose(self.group, 1, 2)
        self.assertEqual(vertical_compose(self.group, 1, 1), 1)

    def test_checked_horizontal_composition(self):
        G = indiscrete_groupoid(2)
        with self.assertRaises(CompositionError):
            horizontal_compose(G, 1, 1)
        self.assertEqual(horizontal_compose(G, 1, 2), 0)

    def test_vertical_chain_and_whiskers_in_b2z3(self):
        G = double_delooping(FiniteGroup.cyclic(3))
        self.assertEqual(G.vertical_chain(1, 1, 2), 1)
        self.assertEqual(G.whisker_before(0, 2), 2)
        self.assertEqual(G.whisker_after(2, 0), 2)


class TestTwoFunctors(unittest.TestCase):
    def test_identity_and_composite_are_functors(self):
        G = delooping(FiniteGroup.symmetric(3))
        identity = identity_functor(G)
        self.assertTrue(validate_two_functor(identity).is_valid)
        self.assertTrue(validate_two_functor(compose_functors(identity, identity)).is_valid)

    def test_constant_functor(self):
        G = delooping(FiniteGroup.cyclic(2))
        functor = constant_functor(G, terminal_two_groupoid(), 0)
        self.assertTrue(validate_two_functor(functor).is_valid)

    def test_non_homomorphism_is_reported(self):
        z3 = delooping(FiniteGroup.cyclic(3))
        functor = TableTwoFunctor(z3, z3, {0: 0}, {0: 0, 1: 1, 2: 1}, {0: 0, 1: 1, 2: 1}, name="bad")
        report = validate_two_functor(functor)
        self.assertIn("associativity", report.families())

    def test_functor_must_be_total(self):
        z3 = delooping(FiniteGroup.cyclic(3))
        with self.assertRaises(StructuralError):
            TableTwoFunctor(z3, z3, {0: 0}, {0: 0}, {0: 0})

    def test_enumerate_counts_group_homomorphisms(self):
        for order in (2, 3):
            with self.subTest(order=order):
                G = delooping(FiniteGroup.cyclic(order))
                self.assertEqual(len(enumerate_two_functors(G, G)), order)
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        self.assertEqual(len(enumerate_two_functors(b2z2, b2z2)), 2)

    def test_enumerated_functors_are_valid(self):
        G = delooping(FiniteGroup.cyclic(3))
        for functor in enumerate_two_functors(G, G):
            self.assertTrue(validate_two_functor(functor).is_valid)


class TestProductsAndHoms(unittest.TestCase):
    def test_product_and_projections(self):
        first, second = delooping(FiniteGroup.cyclic(2)), double_delooping(FiniteGroup.cyclic(3))
        P = product(first, second)
        self.assertEqual(P.cell_counts(), (1, 2, 6))
        self.assertTrue(validate_two_groupoid(P).is_valid)
        for index, factor in enumerate((first, second)):
            self.assertTrue(validate_two_functor(projection(P, index, factor)).is_valid)

    def test_tabulate_keeps_labels(self):
        G = double_delooping(FiniteGroup.cyclic(2))
        table = tabulate(G)
        self.assertEqual(table.cell_counts(), G.cell_counts())
        self.assertEqual({table.label(2, a) for a in table.two_cells()}, {0, 1})

    def test_hom_of_bz2(self):
        G = delooping(FiniteGroup.cyclic(2))
        hom = hom_2gpd(G, G)
        # two functors, each with two automorphisms and only identity modifications
        self.assertEqual(hom.cell_counts(), (2, 4, 4))
        self.assertTrue(validate_two_groupoid(hom).is_valid)

    def test_hom_out_of_a_product_is_curried(self):
        bz2 = delooping(FiniteGroup.cyclic(2))
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        cases = [
            ((bz2, bz2, bz2), (4, 8, 8)),
            ((indiscrete_groupoid(2), bz2, b2z2), (1, 1, 2)),
            ((bz2, b2z2, bz2), (2, 4, 4)),
            ((b2z2, bz2, b2z2), (2, 2, 4)),
        ]
        for (G, H, K), counts in cases:
            with self.subTest(G=G.name, H=H.name, K=K.name):
                uncurried = hom_2gpd(product(G, H), K)
                curried = hom_2gpd(G, hom_2gpd(H, K))
                self.assertEqual(uncurried.cell_counts(), counts)
                self.assertEqual(curried.cell_counts(), counts)
