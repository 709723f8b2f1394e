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

from flamekit.digraph import Digraph, as_edge_set, edge_str
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.flames import is_in_G
from .joining import HittingResult, hit_all_families


logger = logging.getLogger('flamekit.incompressibility')


def in_vertex(edge):
    return '__in_%s_%s' % edge


def out_vertex(edge):
    return '__out_%s_%s' % edge


class AuxiliaryGraph(object):
    """
    ``D`` with the in-edges of ``w`` and the out-edges of ``r`` subdivided,
    ``r`` and ``w`` deleted and every edge reversed.

    Internally disjoint (r, w)-paths of D correspond to disjoint paths of
    the auxiliary digraph from the in-edge side to the out-edge side.
    """

    def __init__(self, digraph, target, graph, source_edges, sink_edges):
        self.origin = digraph
        self.target = target
        self.digraph = graph
        self.source_edges = source_edges
        self.sink_edges = sink_edges

    @property
    def sources(self):
        return frozenset(self.source_edges)

    @property
    def sinks(self):
        return frozenset(self.sink_edges)

    def sources_for(self, edges):
        """
        The subdivision vertices of a set of in-edges of ``w``.
        """
        return frozenset(in_vertex(e) for e in as_edge_set(edges))

    def edges_for(self, vertices):
        return frozenset(self.source_edges[x] for x in vertices)

    def to_json(self):
        return {
            'target': self.target,
            'edges': [edge_str(e) for e in self.digraph.sorted_edges()],
            'sources': {x: edge_str(e) for x, e in self.source_edges.items()},
            'sinks': {y: edge_str(e) for y, e in self.sink_edges.items()},
        }


def build_auxiliary(digraph, target):
    """
    Build the :class:`AuxiliaryGraph` of ``target``. The edge from the root
    to ``target`` must have been removed beforehand.
    """
    root = digraph.root
    if target == root:
        raise DomainError('The auxiliary digraph needs a non-root vertex',
                          subject=target)
    if not digraph.has_vertex(target):
        raise DomainError('%s is not a vertex of the digraph' % target,
                          subject=target)
    direct = (root, target)
    if digraph.has_edge(direct):
        raise DomainError('%s must be removed before building the auxiliary '
                          'digraph' % edge_str(direct),
                          subject=edge_str(direct))

    source_edges = {}
    sink_edges = {}
    edges = set()
    for tail, head in digraph.sorted_edges():
        if head == target:
            middle = in_vertex((tail, head))
            source_edges[middle] = (tail, head)
            edges.add((middle, tail))
        elif tail == root:
            middle = out_vertex((tail, head))
            sink_edges[middle] = (tail, head)
            edges.add((head, middle))
        elif tail != target:
            edges.add((head, tail))

    vertices = (digraph.vertices - {root, target}) | set(source_edges) | \
        set(sink_edges)
    graph = Digraph(vertices, edges)

    return AuxiliaryGraph(digraph, target, graph, source_edges, sink_edges)


def extend_hitting_G(digraph, target, edges, families, limit=None):
    """
    Extend a realizable in-edge set ``I`` of ``w`` to a realizable superset
    meeting every family of in-edges. Returns a :class:`HittingResult` whose
    members are edges.

    The edge ``rw`` is taken out first: it joins the result whenever it is in
    ``I`` or in some family, since its trivial path is disjoint from
    everything.
    """
    root = digraph.root
    edges = as_edge_set(edges)
    families = [as_edge_set(f) for f in families]
    for family in families:
        if not family <= digraph.in_edges(target) - edges:
            raise DomainError('Every family must consist of in-edges of %s '
                              'outside I' % target, subject=target)
    if is_in_G(digraph, target, edges) is None:
        raise DomainError('I is not realizable at %s' % target,
                          subject=target)

    direct = (root, target)
    extra = frozenset()
    if digraph.has_edge(direct):
        if direct in edges or any(direct in f for f in families):
            extra = frozenset([direct])
        digraph = digraph.remove_edges([direct])
        edges = edges - {direct}
        families = [f for f in families if direct not in f]

    auxiliary = build_auxiliary(digraph, target)
    result = hit_all_families(auxiliary.digraph, auxiliary.sources,
                              auxiliary.sources_for(edges), auxiliary.sinks,
                              [auxiliary.sources_for(f) for f in families],
                              limit=limit)
    if result.status != 'found':
        return result

    found = auxiliary.edges_for(result.members) | extra

    problems = []
    if not edges <= found:
        problems.append('the result drops an edge of I')
    if any(not found & f for f in families):
        problems.append('the result misses a family')
    if is_in_G(digraph.add_edges(extra), target, found) is None:
        problems.append('the result is not realizable')
    if problems:
        raise InternalConsistencyError('Hitting extension failed '
                                       'self-verification: %s' %
                                       '; '.join(problems))

    logger.debug('Extended %d in-edges of %s to %d', len(edges), target,
                 len(found))
    return HittingResult('found', found, result.method)
