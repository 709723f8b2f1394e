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

from flamekit.digraph import RootedDigraph, restrict_at
from flamekit.errors import CapExceeded, DomainError
from flamekit.extend import RelevantSet, key_I_star, relevant_sets
from flamekit.flames import is_in_G, maximal_quasi_flame
from flamekit.oracle import brute_is_quasi_flame
from flamekit.oracle.generators import random_digraph, random_flame

from tests import SHARED_VERTEX, TWO_ROUTE, rooted


# v has to be reached for w to be
RELAY = rooted([('r', 'a'), ('a', 'v'), ('v', 'w')])


def _edgeless(digraph):
    return RootedDigraph(digraph.vertices, (), root=digraph.root)


class RelevantSetsTestCase(TestCase):
    def test_relay(self):
        """w can only be realized once a->v is back."""
        found = relevant_sets(RELAY, _edgeless(RELAY), 'v')
        self.assertEqual(found, [RelevantSet('w', {('v', 'w')},
                                             {('a', 'v')})])
        self.assertEqual(found[0].to_json(), {'vertex': 'w',
                                              'edges': ['v->w'],
                                              'hitting': ['a->v']})

    def test_exhaustive_agrees_on_relay(self):
        """Listing every interval finds the same single set here."""
        self.assertEqual(relevant_sets(RELAY, _edgeless(RELAY), 'v',
                                       exhaustive=True),
                         relevant_sets(RELAY, _edgeless(RELAY), 'v'))

    def test_none_for_two_route(self):
        """Nothing depends on the in-edges of v."""
        self.assertEqual(relevant_sets(TWO_ROUTE, _edgeless(TWO_ROUTE), 'v'),
                         [])


class KeyIStarTestCase(TestCase):
    def test_relay(self):
        """The key set of v keeps the edge that w depends on."""
        self.assertEqual(key_I_star(RELAY, _edgeless(RELAY), 'v'),
                         {('a', 'v')})

    def test_smallest(self):
        """Without relevant sets the base in-edges suffice."""
        self.assertEqual(key_I_star(TWO_ROUTE, _edgeless(TWO_ROUTE), 'v'),
                         frozenset())

    def test_keeps_base(self):
        """Base in-edges are always part of the key set."""
        base = _edgeless(TWO_ROUTE).add_edges([('b', 'v')])
        self.assertEqual(key_I_star(TWO_ROUTE, base, 'v'), {('b', 'v')})

    def test_host_not_quasi_flame(self):
        """The host has to be a quasi-flame over the base."""
        with self.assertRaises(DomainError):
            key_I_star(SHARED_VERTEX, _edgeless(SHARED_VERTEX), 'a')

    def test_root(self):
        """The root has no key set."""
        with self.assertRaises(DomainError):
            key_I_star(TWO_ROUTE, _edgeless(TWO_ROUTE), 'r')

    def test_cap(self):
        """Too many candidate edges are refused."""
        with self.assertRaises(CapExceeded):
            key_I_star(TWO_ROUTE, _edgeless(TWO_ROUTE), 'v', cap=1)

    @settings(deadline=None, max_examples=50)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32),
           flame_seed=st.integers(min_value=0, max_value=2 ** 32),
           n=st.integers(min_value=3, max_value=5),
           pick=st.integers(min_value=0, max_value=3))
    def test_random_quasi_flames(self, seed, flame_seed, n, pick):
        """I* holds the base, is realizable and keeps a G-quasi-flame."""
        digraph = random_digraph(n, '0.45', seed)
        base = random_flame(digraph, flame_seed, '0.5')
        host = maximal_quasi_flame(digraph, base.add_edges(
            digraph.out_edges(digraph.root)))
        vertices = host.non_root_vertices()
        vertex = vertices[pick % len(vertices)]

        key = key_I_star(host, base, vertex)
        self.assertLessEqual(base.in_edges(vertex), key)
        self.assertIsNotNone(is_in_G(host, vertex, key))
        self.assertTrue(brute_is_quasi_flame(restrict_at(host, vertex, key),
                                             base))
        self.assertEqual(key_I_star(host, base, vertex, exhaustive=True), key)
