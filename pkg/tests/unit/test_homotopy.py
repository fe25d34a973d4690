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
from app.tools.cech import (
    CrossedModule,
    adjoin_isomorphic_object,
    crossed_module_2group,
    delooping,
    disjoint_union,
    double_delooping,
    indiscrete_groupoid,
)
from app.tools.groups import FiniteGroup
from app.tools.homotopy import homotopy_groups, is_weak_equivalence, pi0_classes
from app.tools.two_groupoid import constant_functor, identity_functor, terminal_two_groupoid


class TestHomotopyGroups(unittest.TestCase):
    def test_orders(self):
        cases = [
            (terminal_two_groupoid(), (1, 1, 1)),
            (delooping(FiniteGroup.symmetric(3)), (1, 6, 1)),
            (double_delooping(FiniteGroup.cyclic(3)), (1, 1, 3)),
            (indiscrete_groupoid(3), (1, 1, 1)),
            (crossed_module_2group(CrossedModule.from_abelian(FiniteGroup.cyclic(3))), (1, 1, 3)),
        ]
        for groupoid, orders in cases:
            with self.subTest(groupoid=groupoid.name):
                self.assertEqual(homotopy_groups(groupoid, groupoid.objects()[0]).orders, orders)

    def test_pi1_of_symmetric_delooping_is_not_abelian(self):
        groups = homotopy_groups(delooping(FiniteGroup.symmetric(3)), 0)
        self.assertFalse(groups.pi1.is_abelian())

    def test_pi0_of_disjoint_union(self):
        union = disjoint_union(terminal_two_groupoid(), indiscrete_groupoid(2))
        self.assertEqual(len(pi0_classes(union)), 2)

    def test_unknown_basepoint(self):
        with self.assertRaises(StructuralError):
            homotopy_groups(terminal_two_groupoid(), 99)


class TestWeakEquivalence(unittest.TestCase):
    def test_identity(self):
        G = double_delooping(FiniteGroup.cyclic(2))
        self.assertTrue(is_weak_equivalence(identity_functor(G)))

    def test_projection_from_adjoined_object(self):
        _, projection = adjoin_isomorphic_object(delooping(FiniteGroup.cyclic(2)))
        self.assertTrue(is_weak_equivalence(projection).is_equivalence)

    def test_collapse_witnesses(self):
        terminal = terminal_two_groupoid()
        loops = delooping(FiniteGroup.cyclic(2))
        spheres = double_delooping(FiniteGroup.cyclic(2))
        self.assertEqual(is_weak_equivalence(constant_functor(loops, terminal, 0)).witness, "pi1")
        self.assertEqual(is_weak_equivalence(constant_functor(spheres, terminal, 0)).witness, "pi2")

    def test_pi0_witness(self):
        union = disjoint_union(terminal_two_groupoid(), terminal_two_groupoid())
        result = is_weak_equivalence(constant_functor(union, terminal_two_groupoid(), 0))
        self.assertFalse(result)
        self.assertEqual(result.witness, "pi0")
