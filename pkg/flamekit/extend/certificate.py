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


import logging

from flamekit.digraph import edge_str, sort_edges
from flamekit.errors import InternalConsistencyError


logger = logging.getLogger('flamekit.extend')


class LargeFlameCertificate(object):
    """
    A large flame ``F*`` of ``D`` together with one realization of its
    in-edges per vertex and one Erdős-Menger witness per vertex, and how it
    was produced.
    """

    def __init__(self, digraph, flame, flame_witnesses, largeness_witnesses,
                 mode, vertex_order, seed=None, base=None, kappa=None):
        self.digraph = digraph
        self.flame = flame
        self.flame_witnesses = flame_witnesses
        self.largeness_witnesses = largeness_witnesses
        self.mode = mode
        self.vertex_order = list(vertex_order)
        self.seed = seed
        self.base = base
        self.kappa = kappa

    def problems(self):
        """
        Re-check every claim of the certificate against ``D``.
        """
        digraph = self.digraph
        flame = self.flame
        root = digraph.root
        problems = []

        if not flame.is_spanning_subgraph_of(digraph):
            problems.append('F* is not a spanning subgraph of D')
        if self.base is not None and not self.base.edges <= flame.edges:
            problems.append('F* does not contain F')

        for vertex in digraph.non_root_vertices():
            witness = self.flame_witnesses.get(vertex)
            if witness is None:
                problems.append('no flame witness for %s' % vertex)
            else:
                problems.extend('flame witness of %s: %s' % (vertex, p)
                                for p in witness.system.problems(flame, root,
                                                                 vertex))
                if witness.system.terminal_edges != flame.in_edges(vertex):
                    problems.append('flame witness of %s misses in-edges' %
                                    vertex)

            largeness = self.largeness_witnesses.get(vertex)
            direct = (root, vertex)
            if largeness is None:
                problems.append('no largeness witness for %s' % vertex)
                continue
            pair = largeness.pair
            host = digraph.remove_edges([direct])
            problems.extend('largeness witness of %s: %s' % (vertex, p)
                            for p in pair.problems(host))
            if len(pair.system) != len(pair.separation):
                problems.append('largeness witness of %s is not maximum' %
                                vertex)
            if not pair.system.edges <= flame.edges:
                problems.append('largeness witness of %s leaves F*' % vertex)
            if digraph.has_edge(direct) and not flame.has_edge(direct):
                problems.append('F* drops %s' % edge_str(direct))

            if self.kappa is not None:
                expected = self.kappa.get(vertex)
                if expected != len(flame.in_edges(vertex)):
                    problems.append('kappa(%s) = %s but F* has %d in-edges' %
                                    (vertex, expected,
                                     len(flame.in_edges(vertex))))

        return problems

    def verify(self):
        problems = self.problems()
        if problems:
            raise InternalConsistencyError('Certificate failed '
                                           'self-verification: %s' %
                                           '; '.join(problems))
        logger.debug('Certificate verified for %d vertices',
                     len(self.vertex_order))
        return self

    def to_json(self):
        certificate = {
            'root': self.digraph.root,
            'vertex_map': {v: i for i, v in enumerate(self.digraph.order)},
            'f_star_edges': [list(e) for e in sort_edges(self.flame.edges)],
            'flame_witnesses': {v: w.to_json() for v, w in
                                self.flame_witnesses.items()},
            'largeness_witnesses': {v: w.to_json() for v, w in
                                    self.largeness_witnesses.items()},
            'mode': self.mode,
            'vertex_order': list(self.vertex_order),
            'seed': self.seed,
        }
        if self.kappa is not None:
            certificate['kappa'] = dict(self.kappa)

        return certificate
