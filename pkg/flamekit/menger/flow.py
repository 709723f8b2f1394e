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

import networkx as nx
from networkx.algorithms.flow import shortest_augmenting_path

from flamekit.digraph import edge_str, vertex_key
from flamekit.errors import DomainError, InternalConsistencyError
from .paths import PathSystem, as_side, side_kind


logger = logging.getLogger('flamekit.menger')

SOURCE = '__source__'
SINK = '__sink__'

# Split nodes of a vertex
IN, OUT = 0, 1


def _node_key(node):
    if isinstance(node, tuple):
        return 0, vertex_key(node[0]), node[1]
    return (1,)


class FlowNetwork(object):
    """
    Unit vertex-capacity flow network of a path problem.

    Every vertex ``v`` is split into ``(v, IN) -> (v, OUT)`` with capacity 1;
    every edge becomes an uncapacitated arc from the tail's out-node to the
    head's in-node. A single-vertex side is its own terminal (its out-node for
    a source, its in-node for a sink); a set side hangs off a super node.
    In-edges of the source side and out-edges of the sink side are dropped
    since no path of the problem can use them.
    """

    def __init__(self, digraph, source, sink):
        sources, single_source = as_side(source)
        sinks, single_sink = as_side(sink)

        for vertex in sources | sinks:
            if not digraph.has_vertex(vertex):
                raise DomainError('%s is not a vertex of the digraph' % vertex,
                                  subject=vertex)
        if sources & sinks:
            raise DomainError('The source and sink sides overlap')
        if single_source and single_sink:
            edge = (source, sink)
            if digraph.has_edge(edge):
                raise DomainError('%s joins the two sides directly; no '
                                  'separation exists' % edge_str(edge),
                                  subject=edge_str(edge))

        self._digraph = digraph
        self._sources = sources
        self._sinks = sinks
        self._kind = side_kind(source, sink)
        self._source_spec = source
        self._sink_spec = sink

        graph = nx.DiGraph()
        self._s = (source, OUT) if single_source else SOURCE
        self._t = (sink, IN) if single_sink else SINK
        graph.add_node(self._s)
        graph.add_node(self._t)

        for vertex in digraph.order:
            if (single_source and vertex == source) or \
                    (single_sink and vertex == sink):
                continue
            graph.add_edge((vertex, IN), (vertex, OUT), capacity=1)

        if not single_source:
            for vertex in digraph.order:
                if vertex in sources:
                    graph.add_edge(SOURCE, (vertex, IN))
        if not single_sink:
            for vertex in digraph.order:
                if vertex in sinks:
                    graph.add_edge((vertex, OUT), SINK)

        for tail, head in digraph.sorted_edges():
            if head in sources or tail in sinks:
                continue
            graph.add_edge((tail, OUT), (head, IN))

        self._graph = graph
        self._flow = {}
        self.value = 0

    @property
    def kind(self):
        return self._kind

    def load(self, system):
        """
        Replace the current flow by the one carried by ``system``.
        """
        problems = system.problems(self._digraph, self._source_spec,
                                   self._sink_spec)
        if problems:
            raise DomainError('Not a valid %s-path-system: %s' %
                              (self._kind, '; '.join(problems)))

        flow = collections.Counter()
        for path in system:
            nodes = self._path_nodes(path)
            for arc in zip(nodes, nodes[1:]):
                flow[arc] += 1

        self._flow = dict(flow)
        self.value = len(system)

    def _path_nodes(self, path):
        nodes = []
        if self._s == SOURCE:
            nodes.append(SOURCE)
        for vertex in path:
            nodes.append((vertex, IN))
            nodes.append((vertex, OUT))
        if self._t == SINK:
            nodes.append(SINK)

        return [n for n in nodes if n in self._graph]

    def maximize(self):
        """
        Compute a maximum flow from scratch with networkx's shortest augmenting
        path algorithm.
        """
        residual = shortest_augmenting_path(self._graph, self._s, self._t)

        self._flow = {}
        for u, v in self._graph.edges():
            flow = residual[u][v]['flow']
            if flow > 0:
                self._flow[(u, v)] = flow

        self.value = residual.graph['flow_value']
        logger.debug('Maximum %s-flow has value %d', self._kind, self.value)

        return self.value

    def _residual(self):
        residual = nx.DiGraph()
        residual.add_nodes_from(self._graph.nodes())
        for u, v, data in self._graph.edges(data=True):
            capacity = data.get('capacity')
            flow = self._flow.get((u, v), 0)
            if capacity is None or flow < capacity:
                residual.add_edge(u, v)
            if flow > 0:
                residual.add_edge(v, u)

        return residual

    def augment_once(self):
        """
        Push one unit along a shortest residual path. Returns False if the
        current flow is already maximum.
        """
        try:
            route = nx.shortest_path(self._residual(), self._s, self._t)
        except nx.NetworkXNoPath:
            return False

        for u, v in zip(route, route[1:]):
            if self._graph.has_edge(u, v):
                self._flow[(u, v)] = self._flow.get((u, v), 0) + 1
            else:
                remaining = self._flow[(v, u)] - 1
                if remaining:
                    self._flow[(v, u)] = remaining
                else:
                    del self._flow[(v, u)]

        self.value += 1
        return True

    def path_system(self):
        """
        Decompose the current flow into a path-system of this network's kind.
        Flow cycles, should any occur, are dropped.
        """
        flow = dict(self._flow)
        successors = collections.defaultdict(list)
        for u, v in flow:
            successors[u].append(v)
        for nodes in successors.values():
            nodes.sort(key=_node_key)

        paths = []
        for _ in range(self.value):
            trail = [self._s]
            while trail[-1] != self._t:
                node = trail[-1]
                following = [n for n in successors[node] if flow.get((node, n))]
                if not following:
                    raise InternalConsistencyError('Flow is not conserved at %r'
                                                   % (node,))
                nxt = following[0]
                if nxt in trail:
                    # Cancel the cycle and resume from its entry point
                    start = trail.index(nxt)
                    cycle = trail[start:] + [nxt]
                    for arc in zip(cycle, cycle[1:]):
                        flow[arc] -= 1
                    del trail[start + 1:]
                    continue
                trail.append(nxt)

            for arc in zip(trail, trail[1:]):
                flow[arc] -= 1

            path = []
            for node in trail:
                if isinstance(node, tuple) and (not path or path[-1] != node[0]):
                    path.append(node[0])
            paths.append(path)

        return PathSystem(paths, self._kind)

    def _split_vertices(self):
        for vertex in self._digraph.order:
            if self._graph.has_edge((vertex, IN), (vertex, OUT)):
                yield vertex

    def source_side_cut(self):
        """
        The vertices whose split arc leaves the residual reach of the source.
        For a maximum flow this is the minimum separation closest to the
        source side.
        """
        residual = self._residual()
        reach = nx.descendants(residual, self._s) | {self._s}

        return frozenset(v for v in self._split_vertices()
                         if (v, IN) in reach and (v, OUT) not in reach)

    def sink_side_cut(self):
        """
        The minimum separation closest to the sink side, for a maximum flow.
        """
        residual = self._residual()
        coreach = nx.ancestors(residual, self._t) | {self._t}

        return frozenset(v for v in self._split_vertices()
                         if (v, OUT) in coreach and (v, IN) not in coreach)
