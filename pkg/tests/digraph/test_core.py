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

from flamekit.digraph import Diagnostic, RootedDigraph, delete, restrict_at, \
        sort_vertices, validate
from flamekit.errors import DomainError
from flamekit.oracle.generators import fig1, random_digraph

from tests import TWO_ROUTE, rooted


class ValidateTestCase(TestCase):
    def test_minimal_digraph(self):
        """A root with a single out-edge is valid."""
        self.assertEqual(validate(rooted([('r', 'a')])), [])

    def test_root_in_edge(self):
        """An edge into the root is reported once."""
        digraph = RootedDigraph(['r', 'a'], [('r', 'a'), ('a', 'r')], root='r')
        self.assertEqual(validate(digraph),
                         [Diagnostic('root-has-in-edge', 'a->r')])

    def test_loop(self):
        """A loop is reported at its vertex."""
        digraph = RootedDigraph(['r', 'a'], [('a', 'a')], root='r')
        self.assertEqual(validate(digraph), [Diagnostic('loop', 'a')])

    def test_missing_root(self):
        """The root must be a vertex."""
        digraph = RootedDigraph(['a'], [], root='r')
        self.assertEqual([d.code for d in validate(digraph)], ['root-missing'])


class OrderTestCase(TestCase):
    def test_root_first_then_natural(self):
        """Digit runs sort numerically and the root comes first."""
        digraph = RootedDigraph(['v10', 'v2', 'r', 'a'], [], root='r')
        self.assertEqual(digraph.order, ('r', 'a', 'v2', 'v10'))

    def test_sort_vertices(self):
        """Natural sorting does not need a root."""
        self.assertEqual(sort_vertices(['x11', 'x1', 'x3']),
                         ['x1', 'x3', 'x11'])


class ImmutabilityTestCase(TestCase):
    def test_queries_leave_state_alone(self):
        """Lookups and networkx copies do not touch the instance."""
        digraph = rooted([('r', 'a'), ('a', 'v'), ('r', 'v')])
        before = dict(vars(digraph))

        self.assertEqual(digraph.in_edges('v'), {('a', 'v'), ('r', 'v')})
        self.assertEqual(digraph.index('v'), 2)
        digraph.to_networkx()

        self.assertEqual(vars(digraph), before)

    def test_networkx_copy_is_fresh(self):
        """Changing a networkx copy never reaches the digraph."""
        graph = TWO_ROUTE.to_networkx()
        graph.add_edge('v', 'a')

        self.assertFalse(TWO_ROUTE.has_edge(('v', 'a')))
        self.assertNotIn(('v', 'a'), TWO_ROUTE.to_networkx().edges)
        self.assertEqual(list(TWO_ROUTE.to_networkx().nodes),
                         ['r', 'a', 'b', 'v'])


class RestrictTestCase(TestCase):
    def setUp(self):
        self.digraph = rooted([('r', 'a'), ('a', 'v'), ('r', 'v')])

    def test_deletes_other_in_edges(self):
        """Restricting v to a->v deletes exactly r->v."""
        restricted = restrict_at(self.digraph, 'v', [('a', 'v')])
        self.assertEqual(restricted.edges, {('r', 'a'), ('a', 'v')})
        self.assertEqual(restricted.vertices, self.digraph.vertices)

    def test_identity(self):
        """Restricting to all in-edges changes nothing."""
        restricted = restrict_at(self.digraph, 'v',
                                 self.digraph.in_edges('v'))
        self.assertEqual(restricted, self.digraph)

    def test_fig1_drops_one_edge(self):
        """Keeping two of three in-edges of a last-layer vertex drops one edge."""
        digraph = fig1((2, 3, 2))
        in_edges = sorted(digraph.in_edges('c1'))
        self.assertEqual(len(in_edges), 3)

        restricted = restrict_at(digraph, 'c1', in_edges[:2])
        self.assertEqual(len(restricted.edges), len(digraph.edges) - 1)

    def test_root_rejected(self):
        """The root cannot be restricted."""
        with self.assertRaises(DomainError):
            restrict_at(self.digraph, 'r', [])

    def test_foreign_edge_rejected(self):
        """Only in-edges of the vertex may be kept."""
        with self.assertRaises(DomainError):
            restrict_at(self.digraph, 'v', [('r', 'a')])

    @settings(deadline=None, max_examples=50)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32), data=st.data())
    def test_nested_restrictions_compose(self, seed, data):
        """Restricting to I and then to J inside I equals restricting to J."""
        digraph = random_digraph(6, '0.4', seed)
        vertex = data.draw(st.sampled_from(digraph.non_root_vertices()))
        in_edges = sorted(digraph.in_edges(vertex))
        outer = [e for e, keep in zip(in_edges, data.draw(
            st.lists(st.booleans(), min_size=len(in_edges),
                     max_size=len(in_edges)))) if keep]
        inner = [e for e, keep in zip(outer, data.draw(
            st.lists(st.booleans(), min_size=len(outer),
                     max_size=len(outer)))) if keep]

        twice = restrict_at(restrict_at(digraph, vertex, outer), vertex, inner)
        self.assertEqual(twice, restrict_at(digraph, vertex, inner))


class DeleteTestCase(TestCase):
    def test_vertex_with_incident_edges(self):
        """Deleting a vertex deletes its edges."""
        result = delete(rooted([('r', 'a'), ('a', 'b')]), ['a'])
        self.assertEqual(result.vertices, {'r', 'b'})
        self.assertFalse(result.edges)

    def test_nothing(self):
        """Deleting the empty set is the identity."""
        self.assertIs(delete(TWO_ROUTE, []), TWO_ROUTE)

    def test_fig1_middle_vertex(self):
        """A middle-layer vertex of fig1(2,3,2) takes 2 + 2 edges with it."""
        digraph = fig1((2, 3, 2))
        self.assertEqual(len(delete(digraph, ['b1']).edges),
                         len(digraph.edges) - 4)

    def test_edges(self):
        """Edges can be deleted as a set."""
        result = delete(TWO_ROUTE, [('a', 'v')])
        self.assertFalse(result.has_edge(('a', 'v')))
        self.assertEqual(result.vertices, TWO_ROUTE.vertices)

    def test_root_rejected(self):
        """Deleting the root is a domain error."""
        with self.assertRaises(DomainError):
            delete(TWO_ROUTE, ['r'])

    def test_unknown_vertex_rejected(self):
        """Deleted elements must belong to the digraph."""
        with self.assertRaises(DomainError):
            delete(TWO_ROUTE, ['z'])

    def test_mixed_rejected(self):
        """Vertices and edges cannot be deleted together."""
        with self.assertRaises(DomainError):
            delete(TWO_ROUTE, ['a', ('a', 'v')])
