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
from flamekit.menger import OrthogonalPair, PathSystem, Separation, \
        is_orthogonal, separates, side_kind

from tests import CHAIN, TWO_ROUTE, rooted


class PathSystemTestCase(TestCase):
    def test_canonical_order(self):
        """Paths are sorted naturally whatever the input order."""
        system = PathSystem([('r', 'b', 'v'), ('r', 'a', 'v')])
        self.assertEqual(system.paths, (('r', 'a', 'v'), ('r', 'b', 'v')))
        self.assertEqual(system, PathSystem([('r', 'a', 'v'),
                                             ('r', 'b', 'v')]))

    def test_endpoints(self):
        """Initial and terminal vertices and edges are read off the paths."""
        system = PathSystem([('r', 'a', 'v'), ('r', 'b', 'v')])
        self.assertEqual(system.initial_vertices, {'r'})
        self.assertEqual(system.terminal_vertices, {'v'})
        self.assertEqual(system.initial_edges, {('r', 'a'), ('r', 'b')})
        self.assertEqual(system.terminal_edges, {('a', 'v'), ('b', 'v')})
        self.assertEqual(system.path_ending_with(('b', 'v')), ('r', 'b', 'v'))
        self.assertIsNone(system.path_ending_with(('r', 'a')))

    def test_valid_xy(self):
        """Two internally disjoint routes form a valid xy system."""
        system = PathSystem([('r', 'a', 'v'), ('r', 'b', 'v')])
        self.assertEqual(system.problems(TWO_ROUTE, 'r', 'v'), [])

    def test_shared_inner_vertex(self):
        """Paths meeting inside are rejected."""
        digraph = rooted([('r', 'c'), ('c', 'a'), ('c', 'b'), ('a', 'v'),
                          ('b', 'v')])
        system = PathSystem([('r', 'c', 'a', 'v'), ('r', 'c', 'b', 'v')])
        problems = system.problems(digraph, 'r', 'v')
        self.assertEqual(len(problems), 1)
        self.assertIn('share c', problems[0])

    def test_missing_edge(self):
        """Paths must use edges of the digraph."""
        system = PathSystem([('r', 'v')])
        self.assertTrue(system.problems(TWO_ROUTE, 'r', 'v'))

    def test_trivial_path_only_for_common_vertex(self):
        """A trivial path is allowed in an XY system at a common vertex."""
        system = PathSystem([('a',)], 'XY')
        self.assertEqual(system.problems(TWO_ROUTE, {'a'}, {'a', 'v'}), [])
        self.assertTrue(PathSystem([('a',)], 'xy').problems(TWO_ROUTE, 'a',
                                                              'v'))

    def test_unknown_kind(self):
        """Only the four disjointness kinds exist."""
        with self.assertRaises(ValueError):
            PathSystem([], 'yx')

    def test_to_json(self):
        """Systems serialize as their kind and path lists."""
        system = PathSystem([('x', 'y')], 'XY')
        self.assertEqual(system.to_json(), {'kind': 'XY',
                                            'paths': [['x', 'y']]})


class SeparationTestCase(TestCase):
    def test_side_kind(self):
        """Single vertices are lower case, sets upper case."""
        self.assertEqual(side_kind('r', 'v'), 'xy')
        self.assertEqual(side_kind({'a'}, 'v'), 'Xy')
        self.assertEqual(side_kind('r', {'a', 'b'}), 'xY')
        self.assertEqual(side_kind({'a'}, {'b'}), 'XY')

    def test_separates(self):
        """Only sets meeting every route separate."""
        self.assertTrue(separates(TWO_ROUTE, {'a', 'b'}, 'r', 'v'))
        self.assertFalse(separates(TWO_ROUTE, {'a'}, 'r', 'v'))
        self.assertTrue(separates(CHAIN, {'b'}, 'r', 'v'))

    def test_separating_by_a_side_vertex(self):
        """A set side can be separated by one of its own vertices."""
        self.assertTrue(separates(TWO_ROUTE, {'a'}, {'a'}, {'v'}))

    def test_xy_separation_avoids_endpoints(self):
        """An (x,y)-separation must not contain x or y."""
        separation = Separation({'v'}, 'r', 'v')
        self.assertTrue(separation.problems(TWO_ROUTE))

    def test_equality_ignores_sides(self):
        """Separations are compared as vertex sets."""
        self.assertEqual(Separation({'a'}, 'r', 'v'),
                         Separation(['a'], {'r'}, {'v'}))
        self.assertIn('a', Separation({'a'}, 'r', 'v'))

    def test_orthogonal_pair(self):
        """Both middle vertices of the two routes are orthogonal to them."""
        system = PathSystem([('r', 'a', 'v'), ('r', 'b', 'v')])
        pair = OrthogonalPair(system, Separation({'a', 'b'}, 'r', 'v'))
        self.assertEqual(pair.problems(TWO_ROUTE), [])
        self.assertEqual(pair.to_json(), {
            'kind': 'xy',
            'paths': [['r', 'a', 'v'], ['r', 'b', 'v']],
            'separation': ['a', 'b'],
        })

    def test_not_orthogonal(self):
        """A vertex on no path is not orthogonal."""
        system = PathSystem([('r', 'a', 'b', 'v')])
        self.assertTrue(is_orthogonal(system, {'a'}))
        self.assertFalse(is_orthogonal(system, {'a', 'b'}))
        self.assertFalse(is_orthogonal(system, {'c'}))


class SeparatesPropertyTestCase(TestCase):
    @settings(deadline=None, max_examples=40)
    @given(st.sets(st.sampled_from(['a', 'b'])))
    def test_two_route_needs_both(self, vertices):
        """Two disjoint routes are separated only by both middle vertices."""
        self.assertEqual(separates(TWO_ROUTE, vertices, 'r', 'v'),
                         vertices == {'a', 'b'})

    def test_overlapping_sides_do_not_separate(self):
        """A vertex on both sides cannot be separated unless it is removed."""
        self.assertFalse(separates(TWO_ROUTE, set(), {'a'}, {'a'}))
        self.assertTrue(separates(TWO_ROUTE, {'a'}, {'a'}, {'a'}))


class SideErrorsTestCase(TestCase):
    def test_problems_on_foreign_source(self):
        """Paths starting off the source side are reported."""
        system = PathSystem([('a', 'v')])
        problems = system.problems(TWO_ROUTE, 'r', 'v')
        self.assertTrue(any('source side' in p for p in problems))

    def test_domain_error_type(self):
        """DomainError carries its subject into the diagnostic."""
        error = DomainError('bad', subject='v')
        self.assertEqual(error.to_json(), {'error': 'domain-error',
                                           'message': 'bad', 'subject': 'v'})
