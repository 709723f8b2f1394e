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

from hypothesis import given, settings
from hypothesis import strategies as st

from flamekit.errors import DomainError
from flamekit.flames import find_flame_violation, is_flame, is_in_G
from flamekit.oracle import brute_G
from flamekit.oracle.generators import random_digraph, random_flame

from tests import SHARED_VERTEX, TWO_ROUTE


class IsInGTestCase(TestCase):
    def test_shared_vertex_pair(self):
        """Two last edges whose routes meet at c are not realizable."""
        self.assertIsNone(is_in_G(SHARED_VERTEX, 'v',
                                  [('a', 'v'), ('b', 'v')]))

    def test_single_edge_witness(self):
        """A single last edge is witnessed by one path."""
        witness = is_in_G(SHARED_VERTEX, 'v', [('a', 'v')])
        self.assertEqual(witness.system.paths, (('r', 'c', 'a', 'v'),))
        self.assertEqual(witness.to_json(), [['r', 'c', 'a', 'v']])
        self.assertEqual(witness.edges, {('a', 'v')})

    def test_empty_set(self):
        """The empty in-edge set is always realizable."""
        witness = is_in_G(SHARED_VERTEX, 'v', [])
        self.assertEqual(len(witness.system), 0)

    def test_foreign_edge(self):
        """Only in-edges of the vertex are accepted."""
        with self.assertRaises(DomainError):
            is_in_G(TWO_ROUTE, 'v', [('r', 'a')])

    @settings(deadline=None, max_examples=25)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32), data=st.data())
    def test_agrees_with_enumeration(self, seed, data):
        """Realizability agrees with the last edges of all path-systems."""
        digraph = random_digraph(5, '0.5', seed)
        vertex = data.draw(st.sampled_from(digraph.non_root_vertices()))
        realizable = set(brute_G(digraph, vertex))
        in_edges = sorted(digraph.in_edges(vertex))
        edges = frozenset(e for e, keep in zip(in_edges, data.draw(
            st.lists(st.booleans(), min_size=len(in_edges),
                     max_size=len(in_edges)))) if keep)

        self.assertEqual(is_in_G(digraph, vertex, edges) is not None,
                         edges in realizable)


class IsFlameTestCase(TestCase):
    def test_two_route(self):
        """Disjoint routes form a flame."""
        witnesses = is_flame(TWO_ROUTE)
        self.assertEqual(sorted(witnesses), ['a', 'b', 'v'])
        self.assertEqual(len(witnesses['v'].system), 2)

    def test_shared_vertex(self):
        """A vertex whose in-edges share a route breaks the flame."""
        self.assertIsNone(is_flame(SHARED_VERTEX))
        self.assertEqual(find_flame_violation(SHARED_VERTEX), 'v')

    def test_threads(self):
        """The worker pool gives the same verdict."""
        self.assertEqual(sorted(is_flame(TWO_ROUTE, jobs=3)), ['a', 'b', 'v'])
        self.assertIsNone(is_flame(SHARED_VERTEX, jobs=3))

    def test_violation_none_for_flame(self):
        """A flame has no violating vertex."""
        self.assertIsNone(find_flame_violation(TWO_ROUTE))

    @settings(deadline=None, max_examples=25)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32),
           flame_seed=st.integers(min_value=0, max_value=2 ** 32))
    def test_random_flames(self, seed, flame_seed):
        """Grown random flames pass the flame check."""
        digraph = random_digraph(6, '0.5', seed)
        flame = random_flame(digraph, flame_seed, '0.7')
        self.assertIsNotNone(is_flame(flame))
        self.assertLessEqual(flame.edges, digraph.edges)
