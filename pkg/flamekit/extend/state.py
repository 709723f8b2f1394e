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
from flamekit.flames import is_large


logger = logging.getLogger('flamekit.extend')


class ExtensionState(object):
    """
    The growing flame ``G_n`` and the shrinking host ``L_n`` of an extension
    run, with the vertices processed so far and their path-systems.

    The state is owned by a single run; :meth:`freeze` ends it.
    """

    def __init__(self, digraph, flame, host):
        self.digraph = digraph
        self.step = -1
        self.flame = flame
        self.host = host
        self.processed = []
        self.systems = []

        self._previous = None
        self._settled = {}
        self._frozen = False

    @property
    def frozen(self):
        return self._frozen

    def advance(self, vertex, system, flame, host):
        if self._frozen:
            raise InternalConsistencyError('The extension state is frozen')

        self._previous = (self.flame, self.host)
        self.step += 1
        self.flame = flame
        self.host = host
        self.processed.append(vertex)
        self.systems.append(system)
        self._settled[vertex] = host.in_edges(vertex)

    def problems(self, largeness=False):
        """
        Describe every violated state invariant. Largeness of the host is only
        checked on request.
        """
        digraph = self.digraph
        problems = []

        if not self.flame.is_spanning_subgraph_of(self.host):
            problems.append('G is not a spanning subgraph of L')
        if not self.host.is_spanning_subgraph_of(digraph):
            problems.append('L is not a spanning subgraph of D')

        if self._previous is not None:
            flame, host = self._previous
            if not flame.edges <= self.flame.edges:
                problems.append('G shrank')
            if not self.host.edges <= host.edges:
                problems.append('L grew')

        for vertex, in_edges in self._settled.items():
            if self.host.in_edges(vertex) != in_edges:
                problems.append('the in-edges of %s changed after it was '
                                'processed' % vertex)

        if self.processed:
            vertex = self.processed[-1]
            direct = frozenset([(digraph.root, vertex)])
            last = self.systems[-1].terminal_edges - direct
            if not (self.flame.in_edges(vertex) - direct ==
                    self.host.in_edges(vertex) - direct == last):
                problems.append('in_G(%s), in_L(%s) and the last edges of '
                                'its path-system differ' % (vertex, vertex))

        if largeness and is_large(self.host, digraph) is None:
            problems.append('L is not large')

        return problems

    def check(self, largeness=True):
        problems = self.problems(largeness=largeness)
        if problems:
            raise InternalConsistencyError('Extension step %d: %s' %
                                           (self.step, '; '.join(problems)))
        logger.debug('Step %d at %s: |G| = %d, |L| = %d', self.step,
                     self.processed[-1] if self.processed else '-',
                     len(self.flame.edges), len(self.host.edges))

    def freeze(self):
        self._frozen = True
        return self

    def to_json(self):
        return {
            'step': self.step,
            'processed': list(self.processed),
            'flame_edges': [edge_str(e) for e in
                            sort_edges(self.flame.edges)],
            'host_edges': [edge_str(e) for e in sort_edges(self.host.edges)],
        }
