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

from app.app_utils.errors import CofaceCompatibilityError, StructuralError
from app.tools.cech import Indexing, cech_cosimplicial, double_delooping, standard_covers
from app.tools.cosimplicial import (
    LevelwiseMap,
    RestrictedCosimplicial2Groupoid,
    coface_keys,
    constant_cosimplicial,
    identity_pairs,
    levelwise_nerve,
    validate_cosimplicial,
    validate_cosimplicial_sset,
)
from app.tools.groups import FiniteGroup
from app.tools.two_groupoid import TableTwoFunctor, identity_functor


def negation(groupoid):
    """The automorphism a ↦ −a of B²(Z/3)."""
    return TableTwoFunctor(groupoid, groupoid, {0: 0}, {0: 0}, {0: 0, 1: 2, 2: 1}, name="neg")


class TestRestrictedCosimplicial(unittest.TestCase):
    def setUp(self):
        self.b2z3 = double_delooping(FiniteGroup.cyclic(3))
        self.constant = constant_cosimplicial(self.b2z3)

    def test_index_bookkeeping(self):
        self.assertEqual(len(coface_keys()), 9)
        self.assertEqual(len(identity_pairs()), 9)
        self.assertTrue(all(i < j <= n for n, i, j in identity_pairs()))

    def test_constant_object_is_valid(self):
        self.assertTrue(validate_cosimplicial(self.constant).is_valid)

    def test_cech_object_is_valid(self):
        cech = cech_cosimplicial(standard_covers()["sphere"], self.b2z3, Indexing.INCREASING)
        self.assertTrue(validate_cosimplicial(cech).is_valid)
        ordered = cech_cosimplicial(standard_covers()["interval"], self.b2z3, Indexing.ORDERED)
        self.assertTrue(validate_cosimplicial(ordered).is_valid)

    def test_twisted_coface_breaks_an_identity(self):
        broken = self.constant.with_coface(2, 0, negation(self.b2z3))
        report = validate_cosimplicial(broken)
        self.assertEqual(report.families(), {"cosimplicial_identity"})

    def test_missing_coface(self):
        cofaces = dict(self.constant.cofaces)
        del cofaces[(3, 3)]
        with self.assertRaises(StructuralError):
            RestrictedCosimplicial2Groupoid(self.constant.levels, cofaces)


class TestLevelwiseMaps(unittest.TestCase):
    def setUp(self):
        self.b2z3 = double_delooping(FiniteGroup.cyclic(3))
        self.constant = constant_cosimplicial(self.b2z3)

    def test_identity_map_is_compatible(self):
        identity = identity_functor(self.b2z3)
        LevelwiseMap(self.constant, self.constant, [identity] * 4).check_compatibility()

    def test_negation_everywhere_is_compatible(self):
        LevelwiseMap(self.constant, self.constant, [negation(self.b2z3)] * 4).check_compatibility()

    def test_incompatible_component_names_the_coface(self):
        identity = identity_functor(self.b2z3)
        levelwise = LevelwiseMap(self.constant, self.constant, [identity, negation(self.b2z3), identity, identity])
        with self.assertRaises(CofaceCompatibilityError) as context:
            levelwise.check_compatibility()
        self.assertEqual((context.exception.degree, context.exception.index), (1, 0))

    def test_component_count(self):
        with self.assertRaises(StructuralError):
            LevelwiseMap(self.constant, self.constant, [identity_functor(self.b2z3)] * 3)


class TestLevelwiseNerve(unittest.TestCase):
    def test_nerve_of_constant_object(self):
        b2z2 = double_delooping(FiniteGroup.cyclic(2))
        X = levelwise_nerve(constant_cosimplicial(b2z2))
        self.assertEqual(X.level(2).level_counts(), (1, 1, 2, 8))
        self.assertIs(X.level(0), X.level(3))
        self.assertTrue(validate_cosimplicial_sset(X).is_valid)

    def test_nerve_of_cech_object(self):
        cech = cech_cosimplicial(standard_covers()["interval"], double_delooping(FiniteGroup.cyclic(2)))
        self.assertTrue(validate_cosimplicial_sset(levelwise_nerve(cech)).is_valid)
