"""
Copyright (c) 2019 The flamekit authors

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""


from unittest import TestCase

from flamekit.errors import DomainError
from flamekit.linkage import covering_in_large, covering_menger_system
from flamekit.menger import PathSystem, is_orthogonal
from flamekit.oracle.generators import fig1

from tests import SHARED_VERTEX, TWO_ROUTE, rooted


class CoveringMengerSystemTestCase(TestCase):
    def test_unrealizable_edges(self):
        """Edges that cannot all be last edges are a domain error."""
        with self.assertRaises(DomainError):
            covering_menger_system(SHARED_VERTEX, 'v', [('a', 'v'), ('b', 'v')],
                                   {'c'})

    def test_not_a_separation(self):
        """The given set must be a smallest separation."""
        with self.assertRaises(DomainError):
            covering_menger_system(TWO_ROUTE, 'v', [('a', 'v')], {'a'})

    def test_fig1_reroutes_through_layers(self):
        """Both last edges into c1 are kept by a maximum system."""
        digraph = fig1((2, 3, 2))
        edges = [('b1', 'c1'), ('b3', 'c1')]
        system = covering_menger_system(digraph, 'c1', edges, {'a1', 'a2'})

        self.assertEqual(len(system), 2)
        self.assertLessEqual(set(edges), system.terminal_edges)
        self.assertTrue(is_orthogonal(system, {'a1', 'a2'}))
        self.assertEqual(system.problems(digraph, 'r', 'c1'), [])


class CoveringInLargeTestCase(TestCase):
    def test_two_route(self):
        """Covering a->v in the whole digraph uses both routes."""
        system = covering_in_large(TWO_ROUTE, TWO_ROUTE, 'v', [('a', 'v')])
        self.assertEqual(system, PathSystem([('r', 'a', 'v'),
                                             ('r', 'b', 'v')], 'xy'))

    def test_root_edge_is_added_back(self):
        """The edge from the root is covered by its trivial path."""
        digraph = rooted([('r', 'v'), ('r', 'a'), ('a', 'v')])
        system = covering_in_large(digraph, digraph, 'v',
                                   [('r', 'v'), ('a', 'v')])
        self.assertEqual(system, PathSystem([('r', 'v'), ('r', 'a', 'v')],
                                            'xy'))

    def test_not_large(self):
        """L must be v-large."""
        thin = TWO_ROUTE.remove_edges([('b', 'v')])
        with self.assertRaises(DomainError):
            covering_in_large(thin, TWO_ROUTE, 'v', [('a', 'v')])
