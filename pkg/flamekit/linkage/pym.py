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

import networkx as nx

from flamekit.digraph import Digraph, sort_edges, sort_vertices
from flamekit.errors import DomainError, InternalConsistencyError
from flamekit.menger import PathSystem


logger = logging.getLogger('flamekit.linkage')

SOURCE = '__source__'
SINK = '__sink__'

SUBDIVISION_PREFIX = '__sub_'

IN, OUT = 0, 1


def _check_system(digraph, sources, sinks, system, kind, name):
    system = PathSystem(system.paths, kind)
    problems = system.problems(digraph, sources, sinks)
    if problems:
        raise DomainError('%s is not a valid %s-path-system: %s' %
                          (name, kind, '; '.join(problems)))
    return system


def _circulation(union, sources, sinks, forced_sources, forced_sinks):
    """
    The min-cost circulation network of a merge. Each vertex of the union
    digraph is split with capacity 1, ``SOURCE -> x`` is forced for the
    sources to keep and ``y -> SINK`` for the sinks to keep. An edge costs
    ``big + rank``: using fewer edges always wins, ties go to the
    lexicographically smaller edges.
    """
    edges = sort_edges(union.edges)
    big = len(edges) * len(edges) + 1

    network = nx.DiGraph()
    network.add_node(SOURCE, demand=0)
    network.add_node(SINK, demand=0)
    for vertex in union.order:
        network.add_node((vertex, IN), demand=0)
        network.add_node((vertex, OUT), demand=0)
        network.add_edge((vertex, IN), (vertex, OUT), capacity=1, weight=0)

    for rank, (tail, head) in enumerate(edges):
        network.add_edge((tail, OUT), (head, IN), capacity=1,
                         weight=big + rank)

    lower = {}
    for vertex in union.order:
        if vertex in sources:
            arc = (SOURCE, (vertex, IN))
            network.add_edge(*arc, capacity=1, weight=0)
            if vertex in forced_sources:
                lower[arc] = 1
        if vertex in sinks:
            arc = ((vertex, OUT), SINK)
            network.add_edge(*arc, capacity=1, weight=0)
            if vertex in forced_sinks:
                lower[arc] = 1

    # Uncapacitated return arc
    network.add_edge(SINK, SOURCE, weight=0)

    for (u, v), bound in lower.items():
        network.nodes[u]['demand'] += bound
        network.nodes[v]['demand'] -= bound
        network[u][v]['capacity'] -= bound

    return network, lower


def _decompose(flow, lower, sources):
    def carried(u, v):
        return flow[u][v] + lower.get((u, v), 0)

    successor = {}
    for u, targets in flow.items():
        for v in targets:
            if carried(u, v) and isinstance(u, tuple) and u[1] == OUT:
                successor[u[0]] = v

    paths = []
    for vertex in sort_vertices(sources):
        if not carried(SOURCE, (vertex, IN)):
            continue
        path = [vertex]
        while True:
            nxt = successor.get(path[-1])
            if nxt is None:
                raise InternalConsistencyError('Merge flow leaves %s without '
                                               'an exit' % path[-1])
            if nxt == SINK:
                break
            path.append(nxt[0])
        paths.append(path)

    return paths


def pym_merge(digraph, sources, sinks, first, second):
    """
    Merge two disjoint (X, Y)-path-systems into one that starts at every
    initial vertex of ``first`` and ends at every terminal vertex of
    ``second``. Only edges of the two systems are used; among all such
    merges the one with the fewest edges is returned.
    """
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    if sources & sinks:
        vertex = sort_vertices(sources & sinks)[0]
        raise DomainError('%s lies on both sides' % vertex, subject=vertex)

    first = _check_system(digraph, sources, sinks, first, 'XY', 'P')
    second = _check_system(digraph, sources, sinks, second, 'XY', 'Q')

    union = Digraph.from_edges(first.edges | second.edges,
                               vertices=first.vertices | second.vertices)
    network, lower = _circulation(union, sources, sinks,
                                  first.initial_vertices,
                                  second.terminal_vertices)
    try:
        flow = nx.min_cost_flow(network)
    except nx.NetworkXUnfeasible:
        raise InternalConsistencyError('No merge exists for %r and %r' %
                                       (first, second))

    merged = PathSystem(_decompose(flow, lower, sources), 'XY')

    problems = merged.problems(digraph, sources, sinks)
    if not first.initial_vertices <= merged.initial_vertices:
        problems.append('an initial vertex of P is lost')
    if not second.terminal_vertices <= merged.terminal_vertices:
        problems.append('a terminal vertex of Q is lost')
    if not merged.edges <= union.edges:
        problems.append('the merge leaves E(P) | E(Q)')
    if problems:
        raise InternalConsistencyError('Merge failed self-verification: %s' %
                                       '; '.join(problems))

    logger.debug('Merged %d and %d paths into %d', len(first), len(second),
                 len(merged))
    return merged


def subdivision_vertex(edge):
    return '%s%s_%s' % (SUBDIVISION_PREFIX, edge[0], edge[1])


def pym_merge_to_vertex(digraph, sources, sink, first, second):
    """
    Merge two (X, y)-path-systems into one that starts at every initial
    vertex of ``first`` and whose last edges include every last edge of
    ``second``. The in-edges of ``y`` are subdivided so that last edges
    become sink vertices of an ordinary merge.
    """
    sources = frozenset(sources)
    if sink in sources:
        raise DomainError('%s lies on both sides' % sink, subject=sink)

    first = _check_system(digraph, sources, sink, first, 'Xy', 'P')
    second = _check_system(digraph, sources, sink, second, 'Xy', 'Q')

    subdivided = {}
    edges = set(e for e in digraph.edges if e[1] != sink)
    for edge in digraph.in_edges(sink):
        middle = subdivision_vertex(edge)
        subdivided[middle] = edge
        edges.add((edge[0], middle))
    split = Digraph.from_edges(edges, vertices=digraph.vertices - {sink})

    def lift(system):
        return PathSystem([p[:-1] + (subdivision_vertex(p[-2:]),)
                           for p in system], 'XY')

    merged = pym_merge(split, sources, frozenset(subdivided),
                       lift(first), lift(second))

    lowered = PathSystem([p[:-1] + (sink,) for p in merged], 'Xy')
    problems = lowered.problems(digraph, sources, sink)
    if not second.terminal_edges <= lowered.terminal_edges:
        problems.append('a last edge of Q is lost')
    if problems:
        raise InternalConsistencyError('Merge to %s failed self-verification: '
                                       '%s' % (sink, '; '.join(problems)))

    return lowered
