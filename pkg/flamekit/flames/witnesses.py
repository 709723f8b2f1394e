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

from flamekit.digraph import edge_str, sort_edges


class GWitness(object):
    """
    An internally disjoint (r, v)-path-system whose last edges are exactly
    ``edges``.
    """

    def __init__(self, vertex, edges, system):
        self.vertex = vertex
        self.edges = frozenset(edges)
        self.system = system

    def to_json(self):
        return [list(p) for p in self.system]

    def __repr__(self):
        return '<GWitness %s %s>' % (self.vertex,
                                     [edge_str(e) for e in
                                      sort_edges(self.edges)])


class LargenessWitness(object):
    """
    A maximum path-system of ``L - rv`` paired with a minimum separation of
    ``D - rv``.
    """

    def __init__(self, vertex, pair, rv_preserved):
        self.vertex = vertex
        self.pair = pair
        self.rv_preserved = rv_preserved

    def to_json(self):
        return {
            'paths': [list(p) for p in self.pair.system],
            'separation': list(self.pair.separation),
        }

    def __repr__(self):
        return '<LargenessWitness %s %r>' % (self.vertex, self.pair)


class QuasiFlameCheck(collections.namedtuple('QuasiFlameCheck',
                                             ['holds', 'vertex', 'edges'])):
    """
    Outcome of a quasi-flame check. On failure ``vertex`` and ``edges`` name
    the smallest in-edge set of the interval that is not realizable.
    """

    def __bool__(self):
        return bool(self.holds)

    def to_json(self):
        output = {'quasi_flame': bool(self.holds)}
        if not self.holds:
            output['vertex'] = self.vertex
            output['edges'] = [edge_str(e) for e in sort_edges(self.edges)]

        return output


class SuperlargeCheck(collections.namedtuple('SuperlargeCheck',
                                             ['holds', 'witnesses', 'edge'])):
    """
    Outcome of the superlarge condition: ``witnesses`` maps every checked
    missing edge to its in-edge set, ``edge`` is the first edge without one.
    """

    def __bool__(self):
        return bool(self.holds)

    def to_json(self):
        output = {
            'superlarge': bool(self.holds),
            'witnesses': {edge_str(e): [edge_str(f) for f in sort_edges(i)]
                          for e, i in self.witnesses.items()},
        }
        if not self.holds:
            output['edge'] = edge_str(self.edge)

        return output
