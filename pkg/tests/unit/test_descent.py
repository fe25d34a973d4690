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

"""Unit tests for descent data, gauge transformations and Desc."""

import unittest

from app.app_utils.errors import BudgetExceededError, DescentTypingError
from app.tools.cech import (
    Indexing,
    adjoin_isomorphic_object,
    cech_cosimplicial,
    cech_levelwise_map,
    double_delooping,
    standard_covers,
)
from app.tools.cosimplicial import constant_cosimplicial
from app.tools.descent import (
    DescentDatum,
    check_cocycle,
    check_invariance,
    compose_gauges,
    descent_2groupoid,
    enumerate_descent_data,
    find_gauge,
    gauge_classes,
    gauge_generators,
    identity_gauge,
    induced_descent_map,
    inverse_gauge,
    is_gauge,
    validate_descent_data,
    validate_gauge,
)
from app.tools.groups import FiniteGroup
from app.tools.homotopy import homotopy_groups
from app.tools.two_groupoid import validate_two_groupoid


def flip(cell, position):
    """Toggles one coordinate of a B²(Z/2)-valued tuple."""
    return cell[:position] + (1 - cell[position],) + cell[position + 1 :]


class TestDescentData(unittest.TestCase):
    def setUp(self):
        self.b2z2 = double_delooping(FiniteGroup.cyclic(2))
        self.covers = standard_covers()

    def test_constant_object(self):
        C = constant_cosimplicial(self.b2z2)
        data = enumerate_descent_data(C)
        self.assertEqual(data, [DescentDatum(0, 0, 0), DescentDatum(0, 0, 1)])
        self.assertTrue(validate_descent_data(C, data).is_valid)

    def test_counts_on_cech_objects(self):
        cases = [("circle", 1, 1), ("sphere", 16, 2)]
        for cover, data_count, class_count in cases:
            with self.subTest(cover=cover):
                C = cech_cosimplicial(self.covers[cover], self.b2z2, Indexing.INCREASING)
                classification = gauge_classes(C)
                self.assertEqual(len(classification.data), data_count)
                self.assertEqual(len(classification.classes), class_count)

    def test_mistyped_object(self):
        C = constant_cosimplicial(self.b2z2)
        with self.assertRaises(DescentTypingError) as context:
            check_cocycle(C, (9,), 0, 0)
        self.assertEqual(context.exception.arrow, "x")

    def test_flipped_coordinate_breaks_the_cocycle(self):
        C = cech_cosimplicial(self.covers["interval"], self.b2z2, Indexing.ORDERED)
        data = enumerate_descent_data(C)
        self.assertEqual(len(data), 8)
        datum = data[0]
        broken = [DescentDatum(datum.x, datum.g, flip(datum.a, p)) for p in range(len(datum.a))]
        broken = [d for d in broken if not check_cocycle(C, d.x, d.g, d.a)]
        self.assertTrue(broken)
        self.assertEqual(validate_descent_data(C, broken).families(), {"cocycle"})

    def test_budget(self):
        C = cech_cosimplicial(self.covers["sphere"], self.b2z2, Indexing.INCREASING)
        with self.assertRaises(BudgetExceededError):
            enumerate_descent_data(C, budget=3)


class TestGauges(unittest.TestCase):
    def setUp(self):
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        self.sphere = cech_cosimplicial(standard_covers()["sphere"], b2z2, Indexing.INCREASING)
        self.interval = cech_cosimplicial(standard_covers()["interval"], b2z2, Indexing.ORDERED)

    def test_generators_are_gauges(self):
        C = self.sphere
        for datum in enumerate_descent_data(C):
            gauges = list(gauge_generators(C, datum))
            self.assertEqual(validate_gauge(C, gauges).families(), set())

    def test_identity_composite_and_inverse(self):
        C = self.sphere
        datum = enumerate_descent_data(C)[0]
        gauge = list(gauge_generators(C, datum))[-1]
        inverse = inverse_gauge(C, gauge)
        self.assertTrue(is_gauge(C, inverse.source, inverse.target, inverse.f, inverse.c))
        loop = compose_gauges(C, gauge, inverse)
        self.assertEqual(loop.target, gauge.source)
        self.assertTrue(is_gauge(C, loop.source, loop.target, loop.f, loop.c))
        self.assertTrue(validate_gauge(C, [identity_gauge(C, datum)]).is_valid)

    def test_no_gauge_between_classes(self):
        C = self.sphere
        classification = gauge_classes(C)
        first, second = classification.representatives
        self.assertIsNone(find_gauge(C, first, second))
        self.assertIsNotNone(find_gauge(C, first, classification.classes[0][-1]))

    def test_exhaustive_search_agrees(self):
        C = self.sphere
        generated = gauge_classes(C)
        exhaustive = gauge_classes(C, exhaustive=True, data=generated.data)
        self.assertEqual(generated.partition(), exhaustive.partition())
        self.assertEqual(generated.class_of(generated.data[0]), 0)

    def test_flipped_gauge_breaks_the_prism(self):
        C = self.interval
        datum = enumerate_descent_data(C)[0]
        broken = []
        for gauge in gauge_generators(C, datum):
            for p in range(len(gauge.c)):
                mutated = type(gauge)(gauge.source, gauge.target, gauge.f, flip(gauge.c, p))
                if not is_gauge(C, mutated.source, mutated.target, mutated.f, mutated.c):
                    broken.append(mutated)
        self.assertTrue(broken)
        self.assertEqual(validate_gauge(C, broken).families(), {"prism"})


class TestDescentTwoGroupoid(unittest.TestCase):
    def test_constant_b2z2(self):
        desc = descent_2groupoid(constant_cosimplicial(double_delooping(FiniteGroup.cyclic(2))))
        self.assertEqual(len(desc.objects()), 2)
        self.assertTrue(validate_two_groupoid(desc).is_valid)
        self.assertEqual(homotopy_groups(desc, desc.objects()[0]).orders, (1, 1, 2))

    def test_gauge_shifts_the_two_cell(self):
        C = constant_cosimplicial(double_delooping(FiniteGroup.cyclic(2)))
        desc = descent_2groupoid(C)
        first, second = desc.objects()
        self.assertEqual(len(desc.hom1(first, second)), 1)
        self.assertEqual(len(desc.hom1(first, first)), 1)


class TestInvariance(unittest.TestCase):
    def test_adjoined_coefficients(self):
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        adjoined, projection = adjoin_isomorphic_object(b2z2)
        for cover in ("circle", "sphere"):
            with self.subTest(cover=cover):
                source = cech_cosimplicial(standard_covers()[cover], adjoined, Indexing.INCREASING)
                target = cech_cosimplicial(standard_covers()[cover], b2z2, Indexing.INCREASING)
                report = check_invariance(cech_levelwise_map(source, target, projection))
                self.assertTrue(report.asserted)
                self.assertTrue(report.bijective)
                self.assertIn("bijection", report.summary())

    def test_induced_functor_maps_data_to_data(self):
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        adjoined, projection = adjoin_isomorphic_object(b2z2)
        covers = standard_covers()
        source = cech_cosimplicial(covers["circle"], adjoined, Indexing.INCREASING)
        target = cech_cosimplicial(covers["circle"], b2z2, Indexing.INCREASING)
        functor = induced_descent_map(cech_levelwise_map(source, target, projection))
        images = {functor.on_object(d) for d in functor.source.objects()}
        self.assertEqual(images, set(functor.target.objects()))
