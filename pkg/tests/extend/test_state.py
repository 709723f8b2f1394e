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

from flamekit.errors import InternalConsistencyError
from flamekit.extend import ExtensionState, LargeFlameCertificate, lovasz
from flamekit.flames import is_flame, is_large
from flamekit.menger import PathSystem

from tests import TWO_ROUTE


THIN = TWO_ROUTE.remove_edges([('b', 'v')])

ROOT_EDGES = TWO_ROUTE.remove_edges([('a', 'v'), ('b', 'v')])


class ExtensionStateTestCase(TestCase):
    def setUp(self):
        self.state = ExtensionState(TWO_ROUTE, ROOT_EDGES, TWO_ROUTE)
        self.system = PathSystem([('r', 'a', 'v'), ('r', 'b', 'v')])

    def test_initial_state(self):
        """A fresh state has nothing processed and no problems."""
        self.assertEqual(self.state.problems(largeness=True), [])
        self.assertEqual(self.state.to_json()['step'], -1)

    def test_advance(self):
        """Covering v moves both in-edges into the flame."""
        self.state.advance('v', self.system, TWO_ROUTE, TWO_ROUTE)
        self.state.check()

        self.assertEqual(self.state.to_json(), {
            'step': 0,
            'processed': ['v'],
            'flame_edges': ['a->v', 'b->v', 'r->a', 'r->b'],
            'host_edges': ['a->v', 'b->v', 'r->a', 'r->b'],
        })

    def test_last_edges_must_match(self):
        """The host may not keep in-edges the flame lacks."""
        self.state.advance('v', PathSystem([('r', 'a', 'v')]), THIN,
                           TWO_ROUTE)
        problems = self.state.problems()
        self.assertTrue(any('differ' in p for p in problems))

    def test_host_may_not_grow(self):
        """L only loses edges from one step to the next."""
        state = ExtensionState(TWO_ROUTE, ROOT_EDGES, THIN)
        state.advance('a', PathSystem([('r', 'a')]), ROOT_EDGES, TWO_ROUTE)
        self.assertIn('L grew', state.problems())

    def test_flame_inside_host(self):
        """G must be a spanning subgraph of L."""
        state = ExtensionState(TWO_ROUTE, TWO_ROUTE, THIN)
        self.assertIn('G is not a spanning subgraph of L', state.problems())

    def test_largeness_on_request(self):
        """A host that is not large fails only the full check."""
        state = ExtensionState(TWO_ROUTE, ROOT_EDGES, THIN)
        self.assertEqual(state.problems(), [])
        self.assertIn('L is not large', state.problems(largeness=True))
        with self.assertRaises(InternalConsistencyError):
            state.check()

    def test_frozen(self):
        """A frozen state refuses further steps."""
        self.assertTrue(self.state.freeze().frozen)
        with self.assertRaises(InternalConsistencyError):
            self.state.advance('v', self.system, TWO_ROUTE, TWO_ROUTE)


class LargeFlameCertificateTestCase(TestCase):
    def test_lovasz_document(self):
        """The certificate document lists F*, the order and kappa."""
        document = lovasz(TWO_ROUTE, seed=7).to_json()

        self.assertEqual(document['root'], 'r')
        self.assertEqual(document['vertex_map'],
                         {'r': 0, 'a': 1, 'b': 2, 'v': 3})
        self.assertEqual(document['f_star_edges'],
                         [['a', 'v'], ['b', 'v'], ['r', 'a'], ['r', 'b']])
        self.assertEqual(document['mode'], 'finite-direct')
        self.assertEqual(document['vertex_order'], ['a', 'b', 'v'])
        self.assertEqual(document['seed'], 7)
        self.assertEqual(document['kappa'], {'a': 1, 'b': 1, 'v': 2})
        self.assertEqual(document['flame_witnesses']['v'],
                         [['r', 'a', 'v'], ['r', 'b', 'v']])

    def test_detects_thin_flame(self):
        """A flame missing a route fails largeness at v."""
        certificate = LargeFlameCertificate(
            TWO_ROUTE, THIN, is_flame(THIN),
            is_large(TWO_ROUTE, TWO_ROUTE, all_vertices=True),
            'finite-direct', ['a', 'b', 'v'])
        problems = certificate.problems()
        self.assertIn('largeness witness of v leaves F*', problems)
        with self.assertRaises(InternalConsistencyError):
            certificate.verify()

    def test_detects_wrong_kappa(self):
        """Recorded connectivities must match the in-degrees."""
        certificate = lovasz(TWO_ROUTE)
        certificate.kappa = {'a': 1, 'b': 1, 'v': 1}
        self.assertEqual(certificate.problems(),
                         ['kappa(v) = 1 but F* has 2 in-edges'])

    def test_detects_missing_base(self):
        """F* has to contain the flame it was grown from."""
        certificate = lovasz(THIN)
        certificate.base = TWO_ROUTE
        self.assertIn('F* does not contain F', certificate.problems())
