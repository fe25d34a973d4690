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

from hypothesis import given
from hypothesis import strategies as st

from app.app_utils.errors import StructuralError
from app.tools.groups import FiniteGroup


class TestFiniteGroup(unittest.TestCase):
    def test_cyclic(self):
        group = FiniteGroup.cyclic(4)
        self.assertEqual(group.order, 4)
        self.assertEqual(group.identity, 0)
        self.assertEqual(group.multiply(3, 2), 1)
        self.assertEqual(group.inverse(1), 3)
        self.assertEqual(group.element_order(2), 2)
        self.assertTrue(group.is_abelian())

    def test_symmetric_group_is_not_abelian(self):
        group = FiniteGroup.symmetric(3)
        self.assertEqual(group.order, 6)
        self.assertEqual(group.identity, 0)
        self.assertFalse(group.is_abelian())

    def test_direct_product_of_coprime_cyclics_is_cyclic(self):
        group = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(3))
        self.assertEqual(group.order, 6)
        self.assertEqual(group.element_order(1 * 3 + 1), 6)

    def test_trivial(self):
        group = FiniteGroup.trivial()
        self.assertEqual(group.order, 1)
        self.assertEqual(group.inverse(0), 0)

    def test_is_homomorphism(self):
        z4, z2 = FiniteGroup.cyclic(4), FiniteGroup.cyclic(2)
        self.assertTrue(z4.is_homomorphism(z2, [0, 1, 0, 1]))
        self.assertFalse(z4.is_homomorphism(z2, [0, 1, 1, 0]))

    def test_monoid_table_is_rejected(self):
        with self.assertRaises(StructuralError):
            FiniteGroup([[0, 1], [1, 1]])

    def test_non_square_table_is_rejected(self):
        with self.assertRaises(StructuralError):
            FiniteGroup([[0, 1]])

    def test_cyclic_order_must_be_positive(self):
        with self.assertRaises(ValueError):
            FiniteGroup.cyclic(0)

    @given(st.integers(1, 12), st.data())
    def test_cyclic_product_is_addition(self, order, data):
        group = FiniteGroup.cyclic(order)
        a = data.draw(st.integers(0, order - 1))
        b = data.draw(st.integers(0, order - 1))
        self.assertEqual(group.multiply(a, b), (a + b) % order)
        self.assertEqual(group.multiply(a, group.inverse(a)), group.identity)
