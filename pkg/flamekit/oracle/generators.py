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


import collections
import logging

from flamekit import CONSTANTS
from flamekit.digraph import RootedDigraph
from flamekit.errors import DomainError
from flamekit.flames import is_in_G
from .prng import SplitRandom, parse_probability


logger = logging.getLogger('flamekit.oracle')

KINDS = ('random', 'fig1', 'figure2a', 'figure2b', 'figure2c', 'figure2d',
         'chain', 'star')

ROOT = 'r'


class Instance(collections.namedtuple('Instance',
                                      ['digraph', 'sources', 'sinks'])):
    """
    A generated digraph, with designated sides for the two-sided kinds.
    """

    @property
    def annotations(self):
        if self.sources is None:
            return None
        return {'sources': sorted(self.sources), 'sinks': sorted(self.sinks)}


class InstanceSpec(object):
    """
    Parameters of a generated instance. The same spec always gives the same
    digraph.
    """

    def __init__(self, kind, n=None, p=None, sizes=None, seed=0):
        if kind not in KINDS:
            raise DomainError('Unknown instance kind %r' % kind)

        generator = CONSTANTS['generator']
        self.kind = kind
        self.n = int(generator['default_n'] if n is None else n)
        self.p = str(generator['default_p'] if p is None else p)
        self.sizes = tuple(int(s) for s in (sizes or (2, 3, 2)))
        self.seed = int(seed or 0)

        if self.n < 1:
            raise DomainError('n must be positive')
        if self.seed < 0:
            raise DomainError('The seed must be non-negative')
        if len(self.sizes) != 3 or any(s < 0 for s in self.sizes):
            raise DomainError('fig1 needs three non-negative layer sizes')
        parse_probability(self.p)

    @classmethod
    def from_json(cls, spec):
        try:
            return cls(spec['kind'], n=spec.get('n'), p=spec.get('p'),
                       sizes=spec.get('sizes'), seed=spec.get('seed', 0))
        except (KeyError, TypeError, AttributeError) as e:
            raise DomainError('Invalid instance spec: %s' % e)

    def to_json(self):
        return {
            'kind': self.kind,
            'n': self.n,
            'p': self.p,
            'sizes': list(self.sizes),
            'seed': self.seed,
        }

    def __repr__(self):
        return '<InstanceSpec %s>' % self.to_json()


def random_digraph(n, p, seed):
    """
    A digraph on ``r, v1, ..., v{n-1}`` where every ordered pair not ending
    at the root is an edge with probability ``p``. Pairs are drawn tail by
    tail in canonical order.
    """
    rng = SplitRandom(seed)
    vertices = [ROOT] + ['v%d' % i for i in range(1, n)]
    edges = []
    for tail in vertices:
        for head in vertices[1:]:
            if tail != head and rng.bernoulli(p):
                edges.append((tail, head))

    return RootedDigraph(vertices, edges, root=ROOT)


def fig1(sizes):
    """
    The root points at every vertex of the first layer; consecutive layers
    are completely joined.
    """
    layers = [['%s%d' % (prefix, i) for i in range(1, size + 1)]
              for prefix, size in zip('abc', sizes)]
    edges = [(ROOT, a) for a in layers[0]]
    for upper, lower in zip(layers, layers[1:]):
        edges.extend((u, w) for u in upper for w in lower)

    vertices = [ROOT] + [v for layer in layers for v in layer]
    return RootedDigraph(vertices, edges, root=ROOT)


def _figure2(kind, n):
    v = ['v%d' % i for i in range(n + 1)]
    w = ['w%d' % i for i in range(n + 2)]

    if kind == 'figure2a':
        sources, sinks = v, w[1:n + 1]
        edges = [(v[i], w[i]) for i in range(1, n + 1)] + \
            [(v[0], w[i]) for i in range(1, n + 1)]
    elif kind == 'figure2b':
        sources, sinks = v[1:], w[:n + 1]
        edges = [(v[i], w[i]) for i in range(1, n + 1)] + \
            [(v[i], w[0]) for i in range(1, n + 1)]
    elif kind == 'figure2c':
        sources, sinks = v, w
        edges = [(v[i], w[j]) for i in range(n + 1)
                 for j in range(i, n + 2)]
    else:
        sources, sinks = v[1:], w[1:n + 1]
        edges = [(v[i], w[i]) for i in range(1, n + 1)]

    digraph = RootedDigraph([ROOT] + sources + sinks, edges, root=ROOT)
    return Instance(digraph, frozenset(sources), frozenset(sinks))


def gen(spec):
    """
    Generate the :class:`Instance` described by an :class:`InstanceSpec`.
    """
    if spec.kind == 'random':
        digraph = random_digraph(spec.n, spec.p, spec.seed)
    elif spec.kind == 'fig1':
        digraph = fig1(spec.sizes)
    elif spec.kind == 'chain':
        vertices = [ROOT] + ['v%d' % i for i in range(1, spec.n)]
        digraph = RootedDigraph(vertices, zip(vertices, vertices[1:]),
                                root=ROOT)
    elif spec.kind == 'star':
        vertices = [ROOT] + ['v%d' % i for i in range(1, spec.n)]
        digraph = RootedDigraph(vertices, [(ROOT, v) for v in vertices[1:]],
                                root=ROOT)
    else:
        return _figure2(spec.kind, spec.n)

    logger.debug('Generated %r with %d edges', spec, len(digraph.edges))
    return Instance(digraph, None, None)


def random_flame(digraph, seed, p):
    """
    A flame of ``digraph`` grown from the edgeless one. Edges are visited in
    a seeded random order; each is kept with probability ``p`` when its head
    stays realizable.
    """
    rng = SplitRandom(seed)
    flame = RootedDigraph(digraph.vertices, (), root=digraph.root)
    for edge in rng.shuffled(digraph.sorted_edges()):
        if not rng.bernoulli(p):
            continue
        attempt = flame.add_edges([edge])
        head = edge[1]
        if is_in_G(attempt, head, attempt.in_edges(head)) is not None:
            flame = attempt

    return flame
